"""Core calculus: encodings, autocorrelations, run structure, run vector."""

import pytest

from runvec.seqcore import (
    BinarySequence,
    ParseError,
    RunLengthEncoding,
    all_sequences,
    aperiodic_autocorrelations,
    autocorrelation_profile,
    decode_rle,
    encode_rle,
    f_eval,
    is_balanced,
    is_barker,
    is_skew_symmetric,
    periodic_autocorrelations,
    run_structure,
    run_vector,
    run_vector_of,
    u_k,
)

from oracles import (
    all_sign_tuples,
    brute_aperiodic,
    brute_is_barker,
    brute_is_skew_symmetric,
    brute_periodic,
    brute_prefix_structure,
    brute_runs,
    compositions,
)

BARKER_13 = "+++++--++-+-+"


def seq(text):
    return BinarySequence.from_text(text)


def rle(sign, runs):
    return RunLengthEncoding(sign, tuple(runs))


class TestTextFormats:
    def test_sequence_round_trip(self):
        assert seq("+++--+-").to_text() == "+++--+-"
        assert seq("+").elems == (1,)
        assert seq("-").elems == (-1,)

    def test_sequence_parse_error_position(self):
        with pytest.raises(ParseError) as err:
            seq("++x-")
        assert err.value.position == 2
        with pytest.raises(ParseError) as err:
            seq("")
        assert err.value.position == 0

    def test_rle_round_trip(self):
        assert RunLengthEncoding.from_text("+,3,2,1,1") == rle(1, (3, 2, 1, 1))
        assert rle(-1, (1,)).to_text() == "-,1"
        assert RunLengthEncoding.from_text("-,5").runs == (5,)

    def test_rle_parse_errors(self):
        with pytest.raises(ParseError) as err:
            RunLengthEncoding.from_text("3,2,1")
        assert err.value.position == 0
        with pytest.raises(ParseError) as err:
            RunLengthEncoding.from_text("+;3")
        assert err.value.position == 1
        with pytest.raises(ParseError) as err:
            RunLengthEncoding.from_text("+,3,0,1")
        assert err.value.position == 4
        with pytest.raises(ParseError):
            RunLengthEncoding.from_text("+,3,-2")

    def test_invalid_values_rejected(self):
        with pytest.raises(ValueError):
            BinarySequence((1, 0, -1))
        with pytest.raises(ValueError):
            BinarySequence(())
        with pytest.raises(ValueError):
            RunLengthEncoding(1, (3, 0))
        with pytest.raises(ValueError):
            RunLengthEncoding(2, (3,))
        with pytest.raises(ValueError):
            RunLengthEncoding(1, ())


class TestEncodeDecode:
    @pytest.mark.parametrize(
        "text,sign,runs",
        [
            ("++-", 1, (2, 1)),
            ("+", 1, (1,)),
            ("+++--+-", 1, (3, 2, 1, 1)),
        ],
    )
    def test_encode_examples(self, text, sign, runs):
        got = encode_rle(seq(text))
        assert got.start_sign == sign
        assert got.runs == runs
        assert got.runs == brute_runs(seq(text).elems)
        assert got.n == len(text)

    @pytest.mark.parametrize(
        "sign,runs,text",
        [
            (1, (5, 2, 2, 1, 1, 1, 1), BARKER_13),
            (-1, (1,), "-"),
            (1, (3, 3, 1, 2, 1, 1), "+++---+--+-"),
        ],
    )
    def test_decode_examples(self, sign, runs, text):
        assert decode_rle(rle(sign, runs)).to_text() == text

    def test_round_trip_exhaustive_to_14(self):
        for n in range(1, 15):
            for elems in all_sign_tuples(n):
                s = BinarySequence(elems)
                assert decode_rle(encode_rle(s)) == s

    def test_encode_decode_inverse_on_rles(self):
        for n in range(1, 11):
            for runs in compositions(n):
                for sign in (1, -1):
                    r = rle(sign, runs)
                    assert encode_rle(decode_rle(r)) == r


class TestAutocorrelations:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("++-", (3, 0, -1, 0)),
            ("+", (1, 0)),
            (BARKER_13, (13, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0)),
        ],
    )
    def test_aperiodic_examples(self, text, expected):
        s = seq(text)
        assert aperiodic_autocorrelations(s) == expected
        assert brute_aperiodic(s.elems) == expected

    @pytest.mark.parametrize(
        "text,expected",
        [
            ("++-", (3, -1, -1)),
            ("++++", (4, 4, 4, 4)),
            (BARKER_13, (13,) + (1,) * 12),
        ],
    )
    def test_periodic_examples(self, text, expected):
        s = seq(text)
        assert periodic_autocorrelations(s) == expected
        assert brute_periodic(s.elems) == expected

    def test_profile_bundles_both(self):
        p = autocorrelation_profile(seq("++-"))
        assert p.c == (3, 0, -1, 0)
        assert p.c_periodic == (3, -1, -1)

    def test_congruences_exhaustive_to_10(self):
        # parity of C_k, the periodic/aperiodic fold, mod-4 residue,
        # the first-shift formula, and periodic symmetry
        for n in range(1, 11):
            for elems in all_sign_tuples(n):
                s = BinarySequence(elems)
                c = aperiodic_autocorrelations(s)
                cp = periodic_autocorrelations(s)
                gamma = encode_rle(s).gamma
                assert c[0] == n
                assert c[n] == 0
                assert c[1] == 1 + n - 2 * gamma
                for k in range(1, n + 1):
                    assert (c[k] - (n - k)) % 2 == 0
                for k in range(1, n):
                    assert cp[k] == c[k] + c[n - k]
                    assert cp[k] == cp[n - k]
                for k in range(n):
                    assert (cp[k] - n) % 4 == 0


class TestRunStructure:
    def test_examples(self):
        rs = run_structure(rle(1, (2, 1)))
        assert rs.s == (2, 3) and rs.t == (1, 3)
        assert rs.s_set == {2} and rs.t_set == {1}

        rs = run_structure(rle(1, (3, 2, 1, 1)))
        assert rs.s_set == {3, 5, 6} and rs.t_set == {1, 2, 4}
        assert rs.s_set | rs.t_set == set(range(1, 7))
        assert not rs.s_set & rs.t_set

        rs = run_structure(rle(1, (1,)))
        assert rs.s_set == frozenset() and rs.t_set == frozenset()

    def test_invariants_all_rles_to_14(self):
        for n in range(1, 15):
            for runs in compositions(n):
                rs = run_structure(rle(1, runs))
                gamma = len(runs)
                s, t, s_set, t_set = brute_prefix_structure(runs)
                assert rs.s == s and rs.t == t
                assert rs.s_set == s_set and rs.t_set == t_set
                assert len(rs.s_set) == gamma - 1 and len(rs.t_set) == gamma - 1
                assert all(rs.s[j] < rs.s[j + 1] for j in range(gamma - 1))
                assert rs.s[-1] == n and rs.t[-1] == n
                # s_j + t_{gamma-j} = n, reading the j = gamma term as t_0 = 0
                for j in range(1, gamma + 1):
                    t_co = rs.t[gamma - j - 1] if j < gamma else 0
                    assert rs.s[j - 1] + t_co == n
                # boundary membership <=> sign flip in the decoded sequence,
                # forward boundary at k <=> reverse boundary at n-k
                elems = decode_rle(rle(1, runs)).elems
                for k in range(1, n):
                    assert (k in rs.s_set) == (elems[k - 1] * elems[k] == -1)
                    assert (k in rs.s_set) == ((n - k) in rs.t_set)

    def test_boundaries_match_sign_changes_to_12(self):
        # position k is a forward boundary exactly when the sequence flips
        # there, and exactly when n-k is a reverse boundary
        for n in range(2, 13):
            for elems in all_sign_tuples(n):
                s = BinarySequence(elems)
                rs = run_structure(encode_rle(s))
                for k in range(1, n):
                    flips = elems[k - 1] * elems[k] == -1
                    assert (k in rs.s_set) == flips
                    assert (k in rs.s_set) == ((n - k) in rs.t_set)


class TestSignFunctions:
    def test_f_eval_examples(self):
        rs = run_structure(rle(1, (3, 2, 1, 1)))
        assert f_eval(rs, 3) == (-1, 0, -1)
        assert f_eval(rs, 6) == (-1, 0, -1)
        assert f_eval(rs, 0) == (0, 0, 0)
        assert f_eval(rs, -7) == (0, 0, 0)
        assert f_eval(rs, 7) == (0, 0, 0)  # final boundary is in neither set
        assert f_eval(rs, 100) == (0, 0, 0)

    def test_reflection_identity_all_rles_to_14(self):
        # forward sign at k equals the reverse sign at n-k up to gamma parity
        for n in range(1, 15):
            for runs in compositions(n):
                rs = run_structure(rle(1, runs))
                sign_gamma = -1 if len(runs) % 2 else 1
                for k in range(-2, n + 3):
                    fs, ft, f = f_eval(rs, k)
                    assert f == fs + ft
                    assert fs == sign_gamma * f_eval(rs, n - k)[1]

    def test_u_k_examples(self):
        rs = run_structure(rle(1, (3, 2, 1, 1)))
        assert u_k(rs, 4) == 1
        assert u_k(rs, 2) == 0
        rs2 = run_structure(rle(1, (3, 2, 2, 1, 1)))
        assert u_k(rs2, 7) == 2

    def test_u_k_vanishes_up_to_first_boundary(self):
        for runs in compositions(9):
            rs = run_structure(rle(1, runs))
            for k in range(1, rs.s[0] + 1):
                if k <= rs.n - 1:
                    assert u_k(rs, k) == 0

    def test_u_k_range_errors(self):
        rs = run_structure(rle(1, (3, 2, 1, 1)))
        with pytest.raises(ValueError):
            u_k(rs, 0)
        with pytest.raises(ValueError):
            u_k(rs, 7)


class TestRunVector:
    def test_examples(self):
        rv = run_vector(seq("++-"))
        assert rv.r_tilde == (-1, -1)
        assert rv.r == (-1, -1)

        rv = run_vector(decode_rle(rle(1, (3, 2, 1, 1))))
        assert rv.r_tilde == (-1, 1, -1, 1, -1, -3)
        assert rv.at(1) == -3
        assert rv.tilde(6) == -3

        assert run_vector(seq("+")) == run_vector_of(run_structure(rle(1, (1,))))
        assert run_vector(seq("+")).r_tilde == ()

    def test_matches_componentwise_definition(self):
        # the unrolled fast path must agree with f + 2u entry by entry
        for n in range(2, 13):
            for runs in compositions(n):
                rs = run_structure(rle(1, runs))
                rv = run_vector_of(rs)
                for k in range(1, n):
                    assert rv.tilde(k) == f_eval(rs, k)[2] + 2 * u_k(rs, k)

    def test_reflection_and_bound(self):
        for n in range(2, 13):
            for runs in compositions(n):
                gamma = len(runs)
                sign_gamma = -1 if gamma % 2 else 1
                rv = run_vector_of(run_structure(rle(1, runs)))
                assert len(rv.r_tilde) == n - 1 and len(rv.r) == n - 1
                for k in range(1, n):
                    assert rv.at(k) == sign_gamma * rv.tilde(n - k)
                    assert abs(rv.tilde(k)) <= 2 * gamma - 1

    def test_accessor_range_errors(self):
        rv = run_vector(seq("++-"))
        with pytest.raises(ValueError):
            rv.tilde(0)
        with pytest.raises(ValueError):
            rv.at(3)


class TestPredicates:
    def test_skew_symmetric_examples(self):
        assert is_skew_symmetric(seq("++-"))
        assert not is_skew_symmetric(seq("++"))
        assert is_skew_symmetric(seq(BARKER_13))
        assert is_skew_symmetric(seq("+"))

    def test_skew_matches_oracle_to_11(self):
        for n in range(1, 12):
            for elems in all_sign_tuples(n):
                assert is_skew_symmetric(BinarySequence(elems)) == brute_is_skew_symmetric(elems)

    def test_balanced_examples(self):
        assert is_balanced(run_structure(rle(1, (2, 1))))
        assert not is_balanced(run_structure(rle(1, (2, 2))))
        assert is_balanced(run_structure(rle(1, (1,))))

    def test_balanced_forces_odd_length_and_run_count(self):
        for n in range(1, 14):
            for runs in compositions(n):
                if is_balanced(run_structure(rle(1, runs))):
                    assert n % 2 == 1
                    assert len(runs) == (n + 1) // 2

    def test_barker_examples(self):
        assert is_barker(seq("++-"))
        assert not is_barker(seq("++++"))
        assert not is_barker(decode_rle(rle(1, (5, 2, 1, 1, 1, 1))))
        assert is_barker(seq("+"))

    def test_barker_matches_oracle_to_11(self):
        for n in range(1, 12):
            for elems in all_sign_tuples(n):
                assert is_barker(BinarySequence(elems)) == brute_is_barker(elems)


class TestEnumerationAndJson:
    def test_all_sequences_order_and_count(self):
        got = [s.to_text() for s in all_sequences(2)]
        assert got == ["++", "+-", "-+", "--"]
        assert sum(1 for _ in all_sequences(10)) == 1024

    def test_json_shapes(self):
        s = seq("+++--+-")
        r = encode_rle(s)
        rs = run_structure(r)
        assert s.to_json() == {"elems": [1, 1, 1, -1, -1, 1, -1], "n": 7}
        assert r.to_json() == {"start_sign": 1, "runs": [3, 2, 1, 1], "gamma": 4, "n": 7}
        assert rs.to_json() == {
            "s": [3, 5, 6, 7],
            "t": [1, 2, 4, 7],
            "S": [3, 5, 6],
            "T": [1, 2, 4],
            "gamma": 4,
            "n": 7,
        }
        rv = run_vector(s)
        assert rv.to_json() == {"r_tilde": [-1, 1, -1, 1, -1, -3], "r": [-3, -1, 1, -1, 1, -1]}
        prof = autocorrelation_profile(s)
        assert prof.to_json() == {
            "C": [7, 0, -1, 0, -1, 0, -1, 0],
            "C_periodic": [7, -1, -1, -1, -1, -1, -1],
        }
