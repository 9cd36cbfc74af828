# Invariant tested: No matter what random garbage we are handed as a
# polynomial, we either parse it, or else throw a CubeAlgError, never any
# other error. And whatever we parse prints back to text that parses to the
# same polynomial.

import os
import sys

import afl

import cubealg

N = 4

afl.init()

data = sys.stdin.detach().read()

try:
    text = data.decode("ascii")
except UnicodeDecodeError:
    os._exit(0)

try:
    f = cubealg.parse_polynomial(text, N)
except cubealg.CubeAlgError:
    pass
else:
    assert cubealg.parse_polynomial(str(f), N) == f
    assert cubealg.polynomial_from_json(cubealg.polynomial_to_json(f), N) == f

try:
    cubealg.parse_monomial(text, N)
except cubealg.CubeAlgError:
    pass

# Suggested by the afl-python docs -- this substantially speeds up fuzzing, at
# the risk of missing bugs that would cause the interpreter to crash on
# exit. cubealg is pure python, so there is nothing down there to crash.
os._exit(0)
