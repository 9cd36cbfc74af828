# We use native strings for all the re patterns and build the bigger rules
# out of the smaller ones with string formatting, so each rule reads like its
# grammar line. The compiled re objects live next to the readers that use
# them (_codec.py, _colored.py).
#
# Literal braces in a rule have to be doubled because of .format().

#  OWS            = *( SP / HTAB )
OWS = r"[ \t]*"

#  natural        = 1*DIGIT
natural = r"[0-9]+"

# Window notation for colored permutations, e.g. [2^1 6^3 4^3 1^0 5^2 3^0].
# The color is mandatory: the printer always writes it and the reader
# insists on it.
#
#  colored-letter = natural "^" natural
#  window         = "[" OWS colored-letter *( 1*SP colored-letter ) OWS "]"
colored_letter = r"(?P<value>{natural})\^(?P<color>{natural})".format(**globals())
_bare_letter = r"{natural}\^{natural}".format(**globals())
window = r"\[{OWS}{_bare_letter}(?:[ \t]+{_bare_letter})*{OWS}\]".format(**globals())

# Subset-indexed variables and monomials, e.g. z{2,4}^4*z{4}; z{} is the
# variable of the empty set and a bare 1 is the empty monomial.
#
#  subset         = "{" OWS [ natural *( OWS "," OWS natural ) ] OWS "}"
#  variable       = "z" subset
#  factor         = variable [ "^" natural ]
#  monomial       = "1" / factor *( OWS "*" OWS factor )
element_list = r"(?:{natural}(?:{OWS},{OWS}{natural})*)?".format(**globals())
subset = r"\{{{OWS}{element_list}{OWS}\}}".format(**globals())
variable = r"z{subset}".format(**globals())
factor = (
    r"z\{{{OWS}(?P<elements>{element_list}){OWS}\}}(?:\^(?P<exp>{natural}))?"
).format(**globals())
_bare_factor = r"{variable}(?:\^{natural})?".format(**globals())
monomial = r"(?:1|{_bare_factor}(?:{OWS}\*{OWS}{_bare_factor})*)".format(**globals())

# Polynomials are signed sums of terms with optional rational coefficients:
#
#  coefficient    = natural [ "/" natural ]
#  term           = coefficient OWS "*" OWS monomial / coefficient / monomial
#  polynomial     = OWS ( "0" / [ sign ] OWS term *( OWS sign OWS term ) ) OWS
coefficient = r"{natural}(?:/{natural})?".format(**globals())
term = r"(?:{coefficient}{OWS}\*{OWS}{monomial}|{coefficient}|{monomial})".format(
    **globals()
)
signed_term = (
    r"(?P<sign>[-+])?{OWS}"
    r"(?:(?P<coeff>{coefficient})(?:{OWS}\*{OWS}(?P<mono>{monomial}))?"
    r"|(?P<bare>{monomial}))"
).format(**globals())
polynomial = r"{OWS}(?:0|[-+]?{OWS}{term}(?:{OWS}[-+]{OWS}{term})*){OWS}".format(
    **globals()
)

# Coefficients in JSON carry their sign: "-1", "3/2".
signed_coefficient = r"-?{coefficient}".format(**globals())
