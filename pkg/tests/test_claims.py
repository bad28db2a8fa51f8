"""Claim registry and verification engine tests.

Pinned hand-computed points, small-range verification of every claim,
mutation sensitivity, skip/counterexample bookkeeping, and determinism
under parallelism.
"""
from __future__ import annotations

import json

import pytest

from motzkinlab import sequences as seq
from motzkinlab.claims import CLAIMS, NonIntegral, s_quotient, t_quotient
from motzkinlab.polynomials import Poly, q_binomial, q_integer
from motzkinlab.reports import (InvalidRange, reports_from_json,
                                reports_to_csv, reports_to_json)
from motzkinlab.verify import (CONGRUENCE_CLAIM_IDS, POLYNOMIAL_CLAIM_IDS,
                               SUITES, UnknownClaim, UnknownSuite, run_suite,
                               verify_claim, verify_congruence_claims,
                               verify_polynomial_claims, verify_sqrt_d_claims)

S_GOLDEN = [6, 23, 90, 432, 2286, 13176, 80418, 513764, 3400518, 23167311]
T_GOLDEN = [51, 271, 1398, 8505, 54387, 367551, 2570931, 18510739, 136282347]


class TestGoldenQuotients:
    def test_s_values(self):
        assert [s_quotient(n) for n in range(1, 11)] == S_GOLDEN

    def test_t_values(self):
        assert [t_quotient(n) for n in range(2, 11)] == T_GOLDEN

    def test_s_cross_check(self):
        for n in range(1, 201):
            total = sum((2 * k + 1) * seq.motzkin(k) ** 2 for k in range(1, n + 1))
            assert s_quotient(n) * n == 2 * total

    def test_t_cross_check(self):
        for n in range(2, 201):
            total = sum(k * (k + 1) * (8 * k + 9)
                        * seq.central_trinomial(k) * seq.central_trinomial(k + 1)
                        for k in range(n))
            assert t_quotient(n) * (n * n * (n * n - 1)) == 6 * total

    def test_preconditions(self):
        with pytest.raises(ValueError):
            s_quotient(0)
        with pytest.raises(ValueError):
            t_quotient(1)


class TestRegistry:
    EXPECTED_IDS = {
        "THM-1.1.i", "THM-1.1.ii", "THM-1.2", "THM-1.3.a", "THM-1.3.b",
        "THM-1.3.c", "THM-1.3.d", "ID-1.8", "COR-1.1.ab", "COR-1.1.c",
        "COR-1.1.d", "ID-2.3", "LEM-2.1.a", "LEM-2.1.b", "REM-2.1", "LEM-2.2",
        "EQ-2.8", "LEM-2.3", "LEM-2.4", "EQ-2.11", "LEM-3.1.a", "LEM-3.1.b",
        "LEM-3.2", "EQ-3.partial", "EQ-3.4", "LEM-3.3", "LEM-3.4", "LEM-4.1",
        "EQ-4.2", "LEM-4.2", "LEM-4.3", "LEM-4.4.a", "LEM-4.4.b", "LEM-4.5",
        "LEM-4.6", "REC-w", "EQ-4.10", "EQ-4.11", "EQ-4.12", "EQ-4.13",
        "REC-W", "CONJ-5.1.a", "CONJ-5.1.b", "REM-5.1", "CONJ-5.2.abc",
        "CONJ-5.3.ab", "MUT-THM-1.1.i", "MUT-THM-1.2", "MUT-ID-1.8",
        "MUT-LEM-2.3",
    }

    def test_registry_is_exhaustive(self):
        assert set(CLAIMS) == self.EXPECTED_IDS

    def test_every_claim_has_kind_and_statement(self):
        kinds = {"identity", "divisibility", "congruence", "integrality",
                 "polynomial-identity", "polynomial-divisibility"}
        for claim in CLAIMS.values():
            assert claim.kind in kinds
            assert claim.statement

    def test_suites_cover_all_non_mutation_claims(self):
        in_suites = set(SUITES["all"])
        assert in_suites == {c for c in CLAIMS if not c.startswith("MUT-")}
        assert len(SUITES["all"]) == len(set(SUITES["all"]))


SMALL = {
    # fast per-claim override ranges for the everything-verifies sweep
    "THM-1.1.ii": {"prime_hi": 60},
    "LEM-2.4": {"prime_hi": 60},
    "REM-5.1": {"prime_hi": 60},
    "LEM-2.3": {"n_max": 10},
    "EQ-2.8": {"n_max": 15},
    "EQ-3.4": {"n_max": 15},
    "CONJ-5.2.abc": {"n_max": 10, "h_max": 2, "m_max": 2},
    "CONJ-5.3.ab": {"n_max": 10, "h_max": 2, "m_max": 2},
    "LEM-2.1.b": {"n_max": 8, "b_set": (1, 3, -2), "c_set": (-2, 0, 1, 2)},
}
GRID_SMALL = {"n_max": 15, "b_set": (-2, 1, 2, 3), "c_set": (-1, 0, 1, 2)}


@pytest.mark.parametrize("claim_id",
                         sorted(c for c in CLAIMS
                                if not c.startswith("MUT-") and c != "CONJ-5.1.b"))
def test_claim_verifies_on_small_range(claim_id):
    overrides = SMALL.get(claim_id)
    if overrides is None:
        overrides = dict(GRID_SMALL) if "b" in CLAIMS[claim_id].param_names else {"n_max": 15}
        if "p" in CLAIMS[claim_id].param_names:
            overrides = {"prime_hi": 60}
    report = verify_claim(claim_id, overrides)
    assert report.status == "verified", report.counterexamples[:2]
    assert report.params["checked"] > 0


class TestPinnedPoints:
    def test_id_1_8_at_n_1(self):
        # both sides equal 6: 1*2*3*M_0^2*3^0 and 1*2*3*M_1*M_0
        report = verify_claim("ID-1.8", {"n_max": 1})
        assert report.status == "verified"
        lhs = sum((k + 1) * (k + 2) * (2 * k + 3) * seq.motzkin(k) ** 2 * 3 ** (0 - k)
                  for k in range(1))
        assert lhs == 6 == 1 * 2 * 3 * seq.motzkin(1) * seq.motzkin(0)

    def test_thm_1_1_i_table_prefix(self):
        report = verify_claim("THM-1.1.i", {"n_max": 50})
        assert report.status == "verified"
        assert [row[1] for row in report.table[:10]] == S_GOLDEN

    def test_thm_1_2_table_prefix(self):
        report = verify_claim("THM-1.2", {"n_max": 50})
        assert report.status == "verified"
        # n = 1 has divisor 0 (trivial); the quotient table starts at n = 2
        assert [row[1] for row in report.table[:9]] == T_GOLDEN

    def test_lem_2_4_at_p_5(self):
        # both sides are 1 mod 5: sum 2/3 + 6/18 + 0 + 0 = 4 + 2 = 6 = 1,
        # and (3^4 - 1)/5 = 16 = 1 (mod 5)
        lhs = (2 * pow(3, -1, 5) + 6 * pow(18, -1, 5)) % 5
        assert lhs == 1
        assert (pow(3, 4) - 1) // 5 % 5 == 1
        report = verify_claim("LEM-2.4", {"prime_lo": 5, "prime_hi": 5})
        assert report.status == "verified" and report.params["checked"] == 1

    def test_rem_5_1_at_p_5(self):
        ws = [seq.motzkin_analog_w(k) for k in range(5)]
        assert sum(w * w for w in ws) == 197
        assert 197 % 5 == 2
        report = verify_claim("REM-5.1", {"prime_hi": 5})
        assert report.status == "verified" and report.params["checked"] == 1

    def test_conj_5_1_a_at_n_2(self):
        total = sum((8 * k + 9) * seq.motzkin_analog_w(k) ** 2 for k in range(2))
        assert total == 26 and total % 4 == 2
        report = verify_claim("CONJ-5.1.a", {"n_max": 2})
        assert report.status == "verified"

    def test_lem_4_5_at_n_2(self):
        from motzkinlab.polynomials import s_poly, w_poly
        assert s_poly(2) == w_poly(2, 1) == Poly((1, 2))
        report = verify_claim("LEM-4.5", {"n_max": 2})
        assert report.status == "verified"

    def test_lem_2_3_point_via_exact_division(self):
        # (a=1, b=1, n=4): the sum polynomial is divisible by [4]_q
        n = 4
        total = Poly(())
        q3 = q_integer(3)
        pw = [Poly((1,))]
        for _ in range(n - 1):
            pw.append(pw[-1] * q3)
        for k in range(n):
            term = (q_binomial(n + 1, k) * q_binomial(n + k, k)
                    * q_binomial(2 * k, k) * q_integer(k + 2) * pw[n - 1 - k])
            total = total + (-term if (n - 1 - k) % 2 else term)
        quotient = total.exact_div(q_integer(n))
        assert quotient * q_integer(n) == total

    def test_lem_2_1_a_at_n_1(self):
        report = verify_claim("LEM-2.1.a", {"n_max": 1})
        assert report.status == "verified"


class TestConjecture51b:
    def test_small_primes_pass_and_p3_skipped(self):
        report = verify_claim("CONJ-5.1.b", {"prime_hi": 7})
        assert report.status == "verified"
        assert report.params["checked"] == 2  # p = 5, 7
        assert report.params["skipped"] and report.params["skipped"][0][0] == {"p": 3}

    def test_printed_congruence_fails_from_p_11(self):
        # The mod-p^2 statement has counterexamples; the first is p = 11
        # (quotient 82 vs symbol side 5 mod 121).  The claim reports them
        # as counterexamples with witnesses rather than crashing.
        report = verify_claim("CONJ-5.1.b", {"prime_hi": 40})
        assert report.status == "counterexample"
        assert report.counterexamples[0]["params"] == {"p": 11}
        assert "82" in report.counterexamples[0]["lhs"]

    def test_congruence_does_hold_mod_p(self):
        for p in (5, 7, 11, 13, 17, 19, 23):
            total = sum((8 * k + 9) * seq.motzkin_analog_w(k) ** 2 for k in range(p))
            assert total % p == 0
            from motzkinlab.modular import legendre
            rhs = (24 + 10 * legendre(-1, p) - 9 * legendre(p, 3)
                   - 18 * legendre(3, p))
            assert (total // p - rhs) % p == 0


class TestConjecture53Interpretations:
    def test_default_interpretation_recorded_and_verified(self, monkeypatch):
        monkeypatch.delenv("MOTZKINLAB_CONJ59_PREFACTOR", raising=False)
        report = verify_claim("CONJ-5.3.ab", {"n_max": 8, "h_max": 2, "m_max": 2})
        assert report.status == "verified"
        assert report.params["notes"]["prefactor_5_9"] == "gcd(2,m-1,n)"

    def test_alternative_interpretation_fails_at_m_1(self, monkeypatch):
        monkeypatch.setenv("MOTZKINLAB_CONJ59_PREFACTOR", "gcd(2^(m-1),n)")
        report = verify_claim("CONJ-5.3.ab", {"n_max": 6, "h_max": 1, "m_max": 1})
        assert report.params["notes"]["prefactor_5_9"] == "gcd(2^(m-1),n)"
        assert report.status == "counterexample"
        assert report.counterexamples[0]["params"]["part"] == "5.9"
        assert report.counterexamples[0]["params"]["m"] == 1


class TestMutationSensitivity:
    @pytest.mark.parametrize("claim_id", ["MUT-THM-1.1.i", "MUT-THM-1.2",
                                          "MUT-ID-1.8", "MUT-LEM-2.3"])
    def test_mutation_yields_counterexample(self, claim_id):
        report = verify_claim(claim_id)
        assert report.status == "counterexample"
        first = report.counterexamples[0]["params"]["n"]
        assert first <= 25

    def test_stop_on_first(self):
        report = verify_claim("MUT-THM-1.1.i", stop_on_first=True)
        assert len(report.counterexamples) == 1


class TestSqrtDClaim:
    def test_perfect_square_pairs(self):
        report = verify_sqrt_d_claims({"n_max": 20, "b_set": (3,), "c_set": (2, 0)})
        assert report.status == "verified"
        assert report.params["checked"] == 2 * 21

    def test_square_branch_values(self):
        # (b, c) = (3, 2): d = 1, x = 1, so the value is the little Schroder number
        from motzkinlab.polynomials import s_poly
        for n in range(6):
            assert s_poly(n + 1)(1) == seq.gen_motzkin(n, 3, 2)
        # (b, c) = (3, 0): d = 9, x = 0, value 3^n
        for n in range(6):
            assert 3 ** n * s_poly(n + 1)(0) == seq.gen_motzkin(n, 3, 0) == 3 ** n

    def test_extension_branch(self):
        report = verify_sqrt_d_claims({"n_max": 15, "b_set": (1,), "c_set": (1,)})
        assert report.status == "verified"
        assert report.params["checked"] == 16


class TestEngine:
    def test_unknown_claim(self):
        with pytest.raises(UnknownClaim):
            verify_claim("NOPE")

    def test_unknown_suite(self):
        with pytest.raises(UnknownSuite):
            run_suite("nope")
        with pytest.raises(UnknownSuite):
            run_suite("")

    def test_invalid_range(self):
        with pytest.raises(InvalidRange):
            verify_claim("THM-1.1.i", {"n_max": -3})
        with pytest.raises(InvalidRange):
            verify_claim("THM-1.1.i", {"bogus_field": 3})

    def test_skipped_points_recorded(self):
        report = verify_claim("THM-1.3.a", {"n_max": 5, "b_set": (2,), "c_set": (1, 2)})
        assert report.params["skipped"] == [[{"b": 2, "c": 1}, "requires d = b^2 - 4c != 0"]]
        assert report.params["checked"] == 5

    def test_fully_skipped_claim_status(self):
        report = verify_claim("THM-1.3.a", {"n_max": 5, "b_set": (2,), "c_set": (1,)})
        assert report.status == "skipped"
        assert report.params["checked"] == 0

    def test_congruence_subset_guard(self):
        with pytest.raises(UnknownClaim):
            verify_congruence_claims(["ID-2.3"])
        reports = verify_congruence_claims(["LEM-4.3"], {"n_max": 10})
        assert reports[0].status == "verified"

    def test_polynomial_subset_guard(self):
        with pytest.raises(UnknownClaim):
            verify_polynomial_claims(["THM-1.1.i"])
        reports = verify_polynomial_claims(["ID-2.3", "LEM-4.5"], {"n_max": 8})
        assert all(r.status == "verified" for r in reports)
        assert CONGRUENCE_CLAIM_IDS and POLYNOMIAL_CLAIM_IDS

    def test_parallel_determinism_single_claim(self):
        kw = {"n_max": 25}
        serial = verify_claim("THM-1.3.a", kw, jobs=1)
        parallel = verify_claim("THM-1.3.a", kw, jobs=3)
        assert (reports_to_json([serial], include_elapsed=False)
                == reports_to_json([parallel], include_elapsed=False))

    def test_suite_determinism_across_jobs(self):
        overrides = {"n_max": 10, "prime_hi": 30}
        one = run_suite("theorems", overrides, jobs=1)
        two = run_suite("theorems", overrides, jobs=2)
        assert (reports_to_json(one, include_elapsed=False)
                == reports_to_json(two, include_elapsed=False))

    def test_suite_order_matches_definition(self):
        reports = run_suite("theorems", {"n_max": 5, "prime_hi": 20})
        assert [r.claim for r in reports] == list(SUITES["theorems"])

    def test_stop_on_first_parallel_matches_serial(self):
        kw = {"prime_hi": 60}
        serial = verify_claim("CONJ-5.1.b", kw, stop_on_first=True, jobs=1)
        parallel = verify_claim("CONJ-5.1.b", kw, stop_on_first=True, jobs=3)
        assert serial.counterexamples == parallel.counterexamples
        assert len(serial.counterexamples) == 1
        assert serial.counterexamples[0]["params"] == {"p": 11}

    def test_suite_stop_on_first_counterexample(self):
        # CONJ-5.1.b fails within the conjectures suite; later claims are skipped
        reports = run_suite("conjectures",
                            {"n_max": 6, "prime_hi": 40, "h_max": 1, "m_max": 1},
                            stop_on_first=True)
        assert reports[-1].claim == "CONJ-5.1.b"
        assert reports[-1].status == "counterexample"
        assert len(reports[-1].counterexamples) == 1
        assert [r.claim for r in reports] == ["CONJ-5.1.a", "CONJ-5.1.b"]


class TestReportSerialization:
    def test_json_round_trip(self):
        reports = [verify_claim("THM-1.1.i", {"n_max": 12}),
                   verify_claim("MUT-ID-1.8", {"n_max": 3})]
        text = reports_to_json(reports)
        back = reports_from_json(text)
        assert [r.to_json_dict() for r in back] == [r.to_json_dict() for r in reports]

    def test_json_field_order(self):
        report = verify_claim("LEM-4.3", {"n_max": 5})
        d = report.to_json_dict()
        assert list(d) == ["claim", "params", "status", "counterexamples",
                           "table", "elapsed_ms"]

    def test_csv_shape(self):
        reports = [verify_claim("THM-1.1.i", {"n_max": 5}),
                   verify_claim("MUT-ID-1.8", {"n_max": 2})]
        text = reports_to_csv(reports)
        lines = text.strip().splitlines()
        assert lines[0] == "claim,param,status,lhs,rhs,witness"
        assert any("counterexample" in line for line in lines)

    def test_deterministic_json_ignores_only_elapsed(self):
        r1 = verify_claim("LEM-4.3", {"n_max": 8})
        r2 = verify_claim("LEM-4.3", {"n_max": 8})
        assert (reports_to_json([r1], include_elapsed=False)
                == reports_to_json([r2], include_elapsed=False))
        d = json.loads(reports_to_json([r1], include_elapsed=False))
        assert d[0]["elapsed_ms"] is None


class TestNonIntegralSignal:
    def test_non_integral_exception_type(self):
        with pytest.raises(NonIntegral):
            raise NonIntegral("demo", 1)
        assert issubclass(NonIntegral, ArithmeticError)
