import json

import pytest

from worked_examples import SEQ_G1, SEQ_G2, SET_CERT, SET_G1, SET_G2
from zedkit.cli import main
from zedkit.formats import emit_seq_genome, emit_set_genome, parse_seq_genome, parse_set_genome


@pytest.fixture
def seq_files(tmp_path):
    p1 = tmp_path / "g1.seq"
    p2 = tmp_path / "g2.seq"
    p1.write_text(emit_seq_genome(SEQ_G1))
    p2.write_text(emit_seq_genome(SEQ_G2))
    return str(p1), str(p2)


@pytest.fixture
def set_files(tmp_path):
    p1 = tmp_path / "g1.set"
    p2 = tmp_path / "g2.set"
    p1.write_text(emit_set_genome(SET_G1))
    p2.write_text(emit_set_genome(SET_G2))
    return str(p1), str(p2)


def test_solve_seq_worked_example(seq_files, tmp_path, capsys):
    cert = tmp_path / "cert.seq"
    assert main(["solve-seq", *seq_files, "--cert-out", str(cert)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("YES exact")
    assert main(["verify", "--variant", "seq", *seq_files, str(cert)]) == 0


def test_solve_seq_identical_exemplar(tmp_path, capsys):
    p = tmp_path / "a.seq"
    p.write_text("1 -2 3\n")
    assert main(["solve-seq", str(p), str(p)]) == 0
    assert capsys.readouterr().out.startswith("YES equality")


def test_solve_seq_order_conflict(tmp_path, capsys):
    a = tmp_path / "a.seq"
    b = tmp_path / "b.seq"
    a.write_text("1 2\n")
    b.write_text("2 1\n")
    assert main(["solve-seq", str(a), str(b)]) == 1
    assert capsys.readouterr().out.startswith("NO")


def test_solve_seq_one_side_duplicate_free(tmp_path, capsys):
    a = tmp_path / "a.seq"
    b = tmp_path / "b.seq"
    a.write_text("1 2 3\n")
    b.write_text("2 1 2 3\n")
    assert main(["solve-seq", str(a), str(b)]) == 0
    assert capsys.readouterr().out.startswith("YES subsequence")


def test_solve_seq_family_mismatch(tmp_path, capsys):
    a = tmp_path / "a.seq"
    b = tmp_path / "b.seq"
    a.write_text("1 1\n")
    b.write_text("2 2\n")
    assert main(["solve-seq", str(a), str(b)]) == 1
    assert capsys.readouterr().out.startswith("NO family-mismatch")


def test_solve_seq_mode_special_rejects_general(seq_files):
    assert main(["solve-seq", *seq_files, "--mode", "special"]) == 3


def test_solve_seq_cap(seq_files):
    assert main(["solve-seq", *seq_files, "--mode", "exact", "--max-families", "3"]) == 4


def test_solve_seq_report(seq_files, tmp_path):
    report = tmp_path / "report.jsonl"
    assert main(["solve-seq", *seq_files, "--report", str(report)]) == 0
    record = json.loads(report.read_text().splitlines()[0])
    assert record["command"] == "solve-seq"
    assert record["verdict"] == "YES"
    assert record["algorithm"] == "exact"
    assert record["elapsed_ms"] >= 0
    assert record["witness"]


def test_solve_set_worked_example(set_files, tmp_path, capsys):
    cert = tmp_path / "cert.set"
    assert main(["solve-set", *set_files, "--cert-out", str(cert)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("YES fpt")
    assert "witness permutation:" in out
    assert main(["verify", "--variant", "set", *set_files, str(cert)]) == 0


def test_solve_set_matching_route(tmp_path, capsys):
    a = tmp_path / "a.set"
    b = tmp_path / "b.set"
    cert = tmp_path / "cert.set"
    a.write_text("1 2\n3\n")
    b.write_text("1 2 3\n1 3\n")
    assert main(["solve-set", str(a), str(b), "--cert-out", str(cert)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("YES matching")
    assert "witness matching:" in out
    assert main(["verify", "--variant", "set", str(a), str(b), str(cert)]) == 0


def test_solve_set_pigeonhole_no(tmp_path, capsys):
    a = tmp_path / "a.set"
    b = tmp_path / "b.set"
    a.write_text("1 2\n")
    b.write_text("1\n2\n")
    assert main(["solve-set", str(a), str(b)]) == 1


def test_solve_set_exact_mode(set_files):
    assert main(["solve-set", *set_files, "--mode", "exact"]) == 0


def test_elcs_worked_pair(tmp_path, capsys):
    a = tmp_path / "a.seq"
    b = tmp_path / "b.seq"
    a.write_text("1 2 4 2 3 5 4 5\n")
    b.write_text("1 1 4 2 4 4 3 5 5 5\n")
    assert main(["elcs", str(a), str(b), "--mandatory", "1,2,3"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("FEASIBLE 6")
    assert main(["elcs", str(a), str(b), "--mandatory", "1,2,3", "--mode", "oracle"]) == 0


def test_elcs_empty_mandatory_prints_plain_lcs(tmp_path, capsys):
    a = tmp_path / "a.seq"
    b = tmp_path / "b.seq"
    a.write_text("1 2 3\n")
    b.write_text("2 3 1\n")
    assert main(["elcs", str(a), str(b)]) == 0
    assert capsys.readouterr().out.startswith("FEASIBLE 2")


def test_elcs_infeasible(tmp_path, capsys):
    a = tmp_path / "a.seq"
    b = tmp_path / "b.seq"
    a.write_text("1 2\n")
    b.write_text("2 2 1\n")
    assert main(["elcs", str(a), str(b), "--mandatory", "1,2"]) == 1
    assert "INFEASIBLE" in capsys.readouterr().out


def test_elcs_special_precondition_suggests_oracle(tmp_path, capsys):
    a = tmp_path / "a.seq"
    b = tmp_path / "b.seq"
    a.write_text("1 1\n")
    b.write_text("1 1\n")
    assert main(["elcs", str(a), str(b), "--mandatory", "1"]) == 3
    assert "--mode oracle" in capsys.readouterr().err
    assert main(["elcs", str(a), str(b), "--mandatory", "1", "--mode", "oracle"]) == 0


def test_reduce_seq_and_verify_files(tmp_path, data_dir, capsys):
    prefix = tmp_path / "inst"
    assert main(["reduce", "--variant", "seq", str(data_dir / "example1.cnf"),
                 "--out-prefix", str(prefix)]) == 0
    out = capsys.readouterr().out
    assert "len = 3n+12m+1 = 37" in out
    g1 = parse_seq_genome((tmp_path / "inst.g1").read_text())
    g2 = parse_seq_genome((tmp_path / "inst.g2").read_text())
    assert len(g1) == len(g2) == 37
    assert (tmp_path / "inst.tsv").exists()


def test_reduce_set_counts(tmp_path, data_dir, capsys):
    prefix = tmp_path / "inst"
    assert main(["reduce", "--variant", "set", str(data_dir / "example1.cnf"),
                 "--out-prefix", str(prefix)]) == 0
    out = capsys.readouterr().out
    assert "g1 genes = n+15m = 34" in out
    assert "g2 genes = 2n+18m = 44" in out
    g1 = parse_set_genome((tmp_path / "inst.g1").read_text())
    assert g1.total_genes() == 34


def test_reduce_set_rejects_repeated_variable(tmp_path):
    cnf = tmp_path / "bad.cnf"
    cnf.write_text("p cnf 2 1\n1 1 2 0\n")
    assert main(["reduce", "--variant", "set", str(cnf), "--out-prefix",
                 str(tmp_path / "x")]) == 3


def test_verify_set_worked_certificate(set_files, tmp_path):
    cert = tmp_path / "cert.set"
    cert.write_text(emit_set_genome(SET_CERT))
    assert main(["verify", "--variant", "set", *set_files, str(cert)]) == 0


def test_verify_rejects_tampered_certificate(seq_files, tmp_path, capsys):
    cert = tmp_path / "cert.seq"
    cert.write_text("-4 1 1 2 -5 3 -6\n")
    assert main(["verify", "--variant", "seq", *seq_files, str(cert)]) == 1
    assert "DuplicateFamily" in capsys.readouterr().out


def test_sat_command(tmp_path, data_dir, capsys):
    assert main(["sat", str(data_dir / "example1.cnf")]) == 0
    assert capsys.readouterr().out.startswith("SAT ")
    unsat = tmp_path / "unsat.cnf"
    unsat.write_text("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n")
    assert main(["sat", str(unsat)]) == 1
    big = tmp_path / "big.cnf"
    big.write_text("p cnf 30 0\n")
    assert main(["sat", str(big)]) == 4


def test_gen_is_deterministic(tmp_path, capsys):
    assert main(["gen", "cnf", "--seed", "42", "--vars", "4", "--clauses", "3"]) == 0
    first = capsys.readouterr().out
    assert main(["gen", "cnf", "--seed", "42", "--vars", "4", "--clauses", "3"]) == 0
    assert capsys.readouterr().out == first
    assert main(["gen", "cnf", "--seed", "43", "--vars", "4", "--clauses", "3"]) == 0
    assert capsys.readouterr().out != first


def test_gen_special_flag_guarantees_special_instance(tmp_path):
    from zedkit import InstanceClass, classify_instance

    prefix = tmp_path / "pair"
    assert main(["gen", "seq", "--seed", "7", "--families", "6", "--special",
                 "--out", str(prefix)]) == 0
    g1 = parse_seq_genome((tmp_path / "pair.g1").read_text())
    g2 = parse_seq_genome((tmp_path / "pair.g2").read_text())
    assert classify_instance(g1, g2) is not InstanceClass.GENERAL


def test_gen_distinct_vars_accepted_by_set_reduction(tmp_path):
    cnf = tmp_path / "f.cnf"
    assert main(["gen", "cnf", "--seed", "3", "--vars", "4", "--clauses", "2",
                 "--distinct-vars", "--out", str(cnf)]) == 0
    assert main(["reduce", "--variant", "set", str(cnf), "--out-prefix",
                 str(tmp_path / "r")]) == 0


def test_gen_rejects_bad_parameters(tmp_path):
    assert main(["gen", "cnf", "--vars", "0"]) == 2
    assert main(["gen", "seq", "--families", "4"]) == 2  # missing --out
    assert main(["gen", "cnf", "--vars", "2", "--distinct-vars"]) == 2


def test_gen_max_occ_bounds_occurrences(tmp_path):
    from zedkit import occurrence_profile

    prefix = tmp_path / "pair"
    assert main(["gen", "seq", "--seed", "11", "--families", "8", "--max-occ", "2",
                 "--out", str(prefix)]) == 0
    for name in ("pair.g1", "pair.g2"):
        profile = occurrence_profile(parse_seq_genome((tmp_path / name).read_text()))
        assert max(profile.values()) <= 2


def test_selftest_zero_budget_exhausts():
    assert main(["selftest", "--budget", "0"]) == 4


def test_selftest_small_run(capsys):
    assert main(["selftest", "--budget", "60", "--cases", "6", "--min-cases", "3"]) == 0
    out = capsys.readouterr().out
    assert "seq-special-vs-exact: 6 cases" in out
    assert "all suites agree" in out


def test_usage_errors(tmp_path, seq_files):
    assert main(["solve-seq", *seq_files, "--mode", "bogus"]) == 2
    assert main(["no-such-command"]) == 2
    missing = str(tmp_path / "nope.seq")
    assert main(["solve-seq", missing, missing]) == 2
    bad = tmp_path / "bad.seq"
    bad.write_text("1 0 2\n")
    assert main(["solve-seq", str(bad), str(bad)]) == 2


def test_solve_set_timeout_exit_code(set_files):
    assert main(["solve-set", *set_files, "--mode", "exact", "--timeout", "-1"]) == 4


def test_threads_flag_must_be_positive(seq_files):
    assert main(["solve-seq", *seq_files, "--threads", "0"]) == 2
    assert main(["solve-seq", *seq_files, "--threads", "2"]) == 0
