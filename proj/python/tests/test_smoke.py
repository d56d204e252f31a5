import itertools

import pytest

import monogen

K5 = "n=5; [0,2] [1,3] [2,4] [3,1]"


def monotone_words(n):
    return {w for w in ("".join(b) for b in itertools.product("01", repeat=n))
            if sum(w[i] != w[i + 1] for i in range(n - 1)) <= 1}


def test_complex_round_trip():
    k = monogen.Complex(K5)
    assert k.n == 5
    assert len(k) == 4
    assert monogen.Complex(str(k)) == k
    assert k.member([3, 4, 0, 1])
    assert not k.member([0, 1, 2, 3])
    assert k.insert_vertex(2).delete_vertex(2) == k


def test_builtin_generates():
    f = monogen.builtin("k5")
    assert set(f.image().words) == monotone_words(5)
    assert f.generates(monogen.mon(5), monogen.Complex(K5))
    assert f.comm_complex().subcomplex_of(monogen.Complex(K5))
    assert f.windows()[2] == [1, 2, 3]


def test_prover_and_trace_checker():
    k = monogen.Complex("n=5; [0,2] [1,3] [2,4] [3,0] [4,1]")
    r = monogen.saturate(k, monogen.mon(5))
    assert r["verdict"] == "CONFLICT"
    ok, msg = monogen.check_trace(r["trace"], k, monogen.mon(5))
    assert ok, msg
    broken = r["trace"].replace("CONFLICT", "CONFLIKT")
    assert not monogen.check_trace(broken, k, monogen.mon(5))[0]
    assert monogen.saturate(monogen.Complex(K5), monogen.mon(5))["verdict"] == "SATURATED"


def test_u5_counterexample_saturates_with_full_join():
    k = monogen.Complex("n=5; [1,4] [0,2] [4,1] {0,2,3} {0,2,4}")
    assert monogen.saturate(k, monogen.u(5), full_join=True)["verdict"] == "SATURATED"


@pytest.mark.parametrize("n,lower,exact,upper", [
    (1, 1, 1, 1), (2, 1, 1, 2), (3, 2, 2, 3), (4, 3, 3, 3),
    (5, 4, 4, 4), (6, 4, None, 5), (7, 5, 5, 6), (8, 6, 6, 6),
])
def test_mu_table(n, lower, exact, upper):
    r = monogen.mu_bounds(n)
    assert (r["lower"], r["exact"], r["upper"]) == (lower, exact, upper)


def test_certificate_replays():
    r = monogen.mu_bounds(7, certify=True)
    k = monogen.short_intervals_complex(7)
    assert monogen.check_trace(r["certificate"], k, monogen.mon(7))[0]


def test_families_and_classification():
    k = monogen.family_complex("K5(n=7,i=3,j=5)")
    assert k == monogen.Complex("n=7; [1,6] [0,4] [6,2] [4,0]")
    tag, shift, reflect = monogen.classify(monogen.Complex(K5))
    assert tag.startswith("K5(n=5,i=2,j=3")
    assert monogen.Complex(K5).transform(shift, reflect) == monogen.family_complex(tag)
    assert monogen.classify(monogen.Complex.full(5)) is None


def test_decisions():
    assert monogen.decide(monogen.Complex(K5)) == "GEN"
    assert monogen.decide(monogen.short_intervals_complex(5)) == "NOGEN"
    assert monogen.minimality_check(monogen.Complex(K5)) == "MINIMAL"
    assert monogen.minimality_check(monogen.Complex(K5).delete_vertex(1)) == "NOT_MINIMAL"


def test_enumerate_minimal_small():
    lines = monogen.enumerate_minimal(4)
    assert lines
    assert all("family=K2(" in line and "status=GEN" in line for line in lines)


def test_errors():
    with pytest.raises(monogen.ParseError):
        monogen.Complex("n=5; [0,")
    with pytest.raises(monogen.MonogenError):
        monogen.family_complex("K5(n=7,i=1,j=5)")


def test_render():
    k = monogen.Complex(K5)
    assert k.render_ascii().count("\n") == 5
    assert k.render_svg() == monogen.Complex(str(k)).render_svg()
