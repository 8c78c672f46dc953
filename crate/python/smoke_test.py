"""Smoke test for the qbch extension module.

Build and install first, e.g. `maturin develop -m crates/py/Cargo.toml`.
"""

import qbch


def main():
    f = qbch.Field(3, 3)
    assert (f.q, f.m, f.order, f.n) == (3, 3, 27, 13)
    a = f.alpha_pow(1)
    assert f.mul(a, f.inv(a)) == f.alpha_pow(0) == 1
    assert f.alpha_pow(13) == f.alpha_pow(0) * 2  # alpha^n = -1

    q = f.quad_form([(1, 1)])
    rank, tau = q.rank_and_type()
    assert rank == 3 and tau in (1, -1)
    assert sum(q.count_solutions(b) for b in range(3)) == 27
    assert q(0) == 0

    assert qbch.cosets(3, 13)[1] == (1, [1, 3, 9])
    assert qbch.coset_leaders(3, 5)[:2] == [76, 67]
    assert qbch.delta(3, 5, 1) == 76

    code = qbch.BchCode(3, 3, 1)
    assert (code.n, code.k, code.delta, code.d_b, code.d) == (13, 4, 7, 7, 7)
    assert code.family == "c1"

    dist = qbch.inner_distribution(3, 3, 1)
    assert {k: v for k, v in dist.items() if v} == {(0, 0): 1, (3, 1): 13, (3, -1): 13}
    assert dist == qbch.inner_distribution(3, 3, 1, oracle=True)

    w = qbch.weight_enumerator(3, 3, 1, "c1")
    assert {k: v for k, v in w.items() if v} == {0: 1, 7: 26, 9: 26, 10: 26, 13: 2}
    assert w == qbch.weight_enumerator(3, 3, 1, "c1", oracle=True)
    assert qbch.weight_enumerator(3, 4, 1, "c2-tilde") == qbch.weight_enumerator(3, 4, 1, "c2-tilde", oracle=True)

    try:
        qbch.weight_enumerator(3, 3, 1, "c2")
    except ValueError:
        pass
    else:
        raise AssertionError("c2 accepted for odd m")

    ok, lines = qbch.verify('{"bch": [{"q": 3, "m": 3, "i": 1}]}')
    assert ok, lines
    ok, _ = qbch.verify('{"bch": [{"q": 3, "m": 3, "i": 1, "delta": 8}]}')
    assert not ok

    print("python smoke test passed")


if __name__ == "__main__":
    main()
