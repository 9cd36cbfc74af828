# Write the benchmarking functions here.
# See "Writing benchmarks" in the asv docs for more information.

import cubealg


# Buchberger on the combined ideal, the expensive part of everything
def time_buchberger_r2_n3():
    cubealg.buchberger(cubealg.combined_ideal(2, 3))


def time_buchberger_r1_n4():
    cubealg.buchberger(cubealg.combined_ideal(1, 4))


def time_buchberger_r1_n4_without_criteria():
    cubealg.buchberger(cubealg.combined_ideal(1, 4), use_criteria=False)


def time_standard_monomials_r3_n4():
    cubealg.standard_monomials(cubealg.predicted_lt_ideal(3, 4))


def time_decode_descent_basis_r3_n4():
    for b in cubealg.descent_basis(3, 4):
        cubealg.decode(b.monomial, 3)


def time_verify_bagno_r3_n4():
    cubealg.verify_identity(cubealg.BAGNO, 4, 10, 3)


# Useful for manual benchmarking, e.g. with vmprof or on PyPy
def _run_buchberger_repeatedly():
    from timeit import default_timer

    REPEAT = 10
    for _ in range(7):
        start = default_timer()
        for _ in range(REPEAT):
            time_buchberger_r2_n3()
        finish = default_timer()
        print(f"{REPEAT / (finish - start):.2f} Groebner bases/sec")


if __name__ == "__main__":
    _run_buchberger_repeatedly()
