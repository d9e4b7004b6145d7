import dataclasses
import json

import pytest

from gf2sigma.classify import (
    CASE_I,
    CASE_II,
    CASE_III,
    CASE_IV_RESIDUAL,
    CASE_NOT_APPLICABLE,
    classify,
    classify_records,
    render_table,
    table,
)
from gf2sigma.mersenne import build, enumerate_primes
from gf2sigma.sigma_chain import analyze


def stub_analysis(c, m, deg=10, e=None):
    """A real analysis reshaped to the wanted (c, m); only classify() reads these."""
    base = analyze(build(1, 2), 5)
    M = dataclasses.replace(base.mersenne, a=1, b=deg - 1)
    return dataclasses.replace(
        base, mersenne=M, degree_gap=c, least_odd_top=m, least_even_top=e
    )


def test_membership_definitions():
    assert classify(stub_analysis(c=10, m=None)).in_sigma1
    assert classify(stub_analysis(c=11, m=None)).in_sigma2  # deg+1 and odd
    assert not classify(stub_analysis(c=12, m=None, deg=11)).in_sigma2  # c even
    assert classify(stub_analysis(c=4, m=6 - 4 + 1)).flags == (False,) * 4
    assert classify(stub_analysis(c=4, m=6)).in_sigma3  # 4+6 = 10, c even
    assert classify(stub_analysis(c=8, m=3)).in_sigma4  # 8+3 = 11, m >= 3
    assert not classify(stub_analysis(c=10, m=1)).in_sigma4  # m = 1 fails m >= 3


def test_absent_quantities_policy():
    rec = classify(stub_analysis(c=None, m=None))
    assert rec.flags == (False, False, False, False)
    assert not rec.in_sigma
    assert rec.case_tag == CASE_NOT_APPLICABLE
    # m absent: the sets referencing m are out
    rec = classify(stub_analysis(c=4, m=None))
    assert not rec.in_sigma3 and not rec.in_sigma4


def test_case_tags():
    assert classify(stub_analysis(c=12, m=1)).case_tag == CASE_I
    assert classify(stub_analysis(c=2, m=3)).case_tag == CASE_II
    assert classify(stub_analysis(c=4, m=9)).case_tag == CASE_III
    # deg+1 with even gap is the definition gap the case split leaves open
    assert classify(stub_analysis(c=12, m=1, deg=11)).case_tag == CASE_IV_RESIDUAL
    # members carry no case tag
    assert classify(stub_analysis(c=10, m=None)).case_tag == CASE_NOT_APPLICABLE


def test_flags_pairwise_exclusive_on_live_data():
    for p in (5, 7):
        for M in enumerate_primes(5, 24):
            rec = classify(analyze(M, p))
            assert sum(rec.flags) <= 1


def test_classify_records_and_table_consistency():
    records = classify_records(5, 20)
    assert len(records) == len(enumerate_primes(5, 20))
    rows = table([5], 20)
    assert rows[0].m_count == len(records)
    for j in range(4):
        assert rows[0].lambdas[j] == sum(r.flags[j] for r in records)


def test_table_small_values():
    # p=5: the four members (2,3),(3,2),(1,5),(5,1) all have degree <= 6
    rows = table([5, 7], 10, parallelism=2)
    assert rows[0].lambdas == (4, 0, 0, 0)
    assert rows[1].lambdas == (0, 0, 2, 2)
    assert rows[0].m_count == rows[1].m_count == len(enumerate_primes(5, 10))


def test_table_conjugation_symmetric_counts():
    records = classify_records(5, 22)
    flags = {(r.analysis.mersenne.a, r.analysis.mersenne.b): r.flags for r in records}
    for (a, b), fl in flags.items():
        assert flags[(b, a)] == fl


def test_table_validates_arguments():
    with pytest.raises(ValueError):
        table([4], 20)
    with pytest.raises(ValueError):
        table([3], 20)  # p = 3 is outside the table's scope
    with pytest.raises(ValueError):
        table([5], 4)


def test_render_formats():
    rows = table([5], 8)
    csv = render_table(rows, "csv")
    lines = csv.splitlines()
    assert lines[0] == "p,d,lambda1,lambda2,lambda3,lambda4,m_count"
    assert lines[1].startswith("5,8,")
    md = render_table(rows, "markdown")
    assert md.splitlines()[0] == "| p | d | lambda1 | lambda2 | lambda3 | lambda4 | m_count |"
    data = json.loads(render_table(rows, "json"))
    assert data[0]["p"] == 5 and data[0]["d"] == 8
    text = render_table(rows, "text")
    assert "lambda1" in text.splitlines()[0]
    with pytest.raises(ValueError):
        render_table(rows, "yaml")
