import itertools

import pytest

from fraclab.classify import (
    HARD_BOUND,
    TIGHT_BOUND,
    TW_BOUND,
    Density,
    Finiteness,
    HostClassFlags,
    PatternClassFlags,
    Verdict,
    check_consistency,
    classify_hom,
    classify_indsub,
    classify_sub,
)
from fraclab.errors import InconsistentFlags, InvalidInput
from fraclab.verify import golden_cases

CLASSIFY = {"sub": classify_sub, "indsub": classify_indsub, "hom": classify_hom}
RANK = {"P": 0, "FPT": 1, "HARD_TIGHT": 2, "HARD": 2}


@pytest.mark.parametrize("case", golden_cases(), ids=lambda c: f"{c['problem']}:{c.get('row', '')}:{c.get('column', '')}")
def test_golden_cases(case):
    v = CLASSIFY[case["problem"]](PatternClassFlags(**case["pattern"]), HostClassFlags(**case["host"]))
    assert v.klass == case["class"]
    assert v.lower_bound == case["lower_bound"]
    assert (v.lower_bound == TIGHT_BOUND) == case["tight"]
    if v.klass.startswith("HARD"):
        assert v.citation


def test_all_matchings_everywhere():
    # all graphs: hard into somewhere dense hosts, FPT into nowhere dense ones
    h = PatternClassFlags("monotone", "infinite", "infinite", "infinite", "infinite", "infinite", "infinite", "infinite")
    sd = HostClassFlags(density="somewhere dense", omega="infinite", beta="infinite", alpha="infinite")
    nd = HostClassFlags(density="nowhere dense", omega="finite", beta="finite", alpha="infinite")
    assert classify_sub(h, sd).lower_bound == HARD_BOUND
    assert classify_sub(h, nd).klass == "FPT"
    assert classify_hom(h, sd).lower_bound == TW_BOUND


def test_ramsey_matching_rejection():
    h = PatternClassFlags("hereditary", "infinite", "infinite", "finite", "finite", "finite", "infinite", "infinite")
    with pytest.raises(InconsistentFlags) as exc:
        check_consistency(h, HostClassFlags(density="nowhere dense"))
    assert exc.value.rule == "ramsey-matching"


ALL_INF = dict(size="infinite", m="infinite", m_ind="infinite", beta_ind="infinite",
               omega="infinite", alpha="infinite", tw="infinite")
DENSE = dict(density="somewhere dense", omega="infinite", beta="infinite", alpha="infinite")


def pat(closure="hereditary", **kw):
    return PatternClassFlags(closure, **{**ALL_INF, **kw})


def host(**kw):
    return HostClassFlags(**{**DENSE, **kw})


@pytest.mark.parametrize("h,g,rule", [
    (pat(size="finite"), host(), "finite-class"),
    (pat(m="finite"), host(), "matching-bound"),
    (pat(tw="finite"), host(), "treewidth-bound"),
    (pat(alpha="finite", omega="finite"), host(), "ramsey-size"),
    (pat(), host(density="nowhere dense", beta="finite"), "host-clique-density"),
    (pat(), host(density="nowhere dense", omega="finite"), "host-biclique-density"),
    (pat(), host(alpha="finite", omega="finite", beta="finite"), "host-independence"),
    (pat("monotone", m_ind="finite"), host(), "monotone-pattern"),
])
def test_rules(h, g, rule):
    with pytest.raises(InconsistentFlags) as exc:
        check_consistency(h, g)
    assert exc.value.rule == rule


def test_unknown_flags_resolve_when_determined():
    # bounded matchings decide #Sub regardless of the host
    v = classify_sub(PatternClassFlags(m="finite"), HostClassFlags())
    assert v.klass == "P"
    v = classify_sub(PatternClassFlags(m="infinite", m_ind="infinite"), HostClassFlags())
    assert v.klass == "UNCLASSIFIED" and v.citation.startswith("open:")
    v = classify_sub(PatternClassFlags(m="infinite", m_ind="infinite"), HostClassFlags(density="somewhere dense"))
    assert v.klass == "HARD" and v.lower_bound == HARD_BOUND


def test_nowhere_dense_hosts_never_hard():
    # every consistent fully specified combination
    values = (Finiteness.FINITE, Finiteness.INFINITE)
    for problem, fn in CLASSIFY.items():
        closures = ("monotone",) if problem == "hom" else ("hereditary", "monotone")
        for closure in closures:
            for flags in itertools.product(values, repeat=7):
                h = PatternClassFlags(closure, *flags)
                for hostv in itertools.product(values, repeat=3):
                    nd = HostClassFlags("monotone", Density.NOWHERE, *hostv)
                    sd = HostClassFlags("monotone", Density.SOMEWHERE, *hostv)
                    try:
                        a = fn(h, nd)
                    except InconsistentFlags:
                        a = None
                    try:
                        b = fn(h, sd)
                    except InconsistentFlags:
                        b = None
                    if a is not None:
                        assert not a.klass.startswith("HARD")
                    if a is not None and b is not None:
                        assert RANK[a.klass] <= RANK[b.klass] or b.klass == "P"


def test_hom_rejects_hereditary():
    with pytest.raises(InvalidInput):
        classify_hom(PatternClassFlags("hereditary"), HostClassFlags())


def test_hom_bounded_treewidth_is_polynomial():
    h = PatternClassFlags("minor-closed", tw="finite")
    assert classify_hom(h, HostClassFlags(density="somewhere dense", omega="infinite", beta="infinite", alpha="infinite")).klass == "P"


def test_flag_parsing():
    assert Finiteness.parse("<inf") is Finiteness.FINITE
    assert Density.parse("nowhere-dense") is Density.NOWHERE
    with pytest.raises(InvalidInput):
        Finiteness.parse("lots")
    with pytest.raises(InvalidInput):
        PatternClassFlags("closed")
    with pytest.raises(ValueError):
        Verdict("HARD", None, "")
    assert Verdict("P", None, "x").as_dict() == {"class": "P", "lower_bound": None, "citation": "x"}
