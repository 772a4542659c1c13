import io
import json
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from knotcover import catalog as cat
from knotcover import oracle
from knotcover.cli import ResultRecord, main, parse_range, UsageError
from knotcover.groups import AbelianGroup


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def records(text):
    return [ResultRecord.from_json(line) for line in text.splitlines()]


class TestCompute:
    def test_6_2_n5(self):
        code, text = run("compute", "--knot", "6_2", "--n", "5", "--format", "records")
        assert code == 0
        (r,) = records(text)
        assert r.torsion == [2, 2, 2, 2] and r.free_rank == 0

    def test_inline_n1_trivial(self):
        code, text = run("compute", "--genus", "2", "--a", "1", "--b", "-4", "--n", "1", "--format", "records")
        assert code == 0
        (r,) = records(text)
        assert r.torsion == [] and r.free_rank == 0 and r.knot is None

    def test_6_3_beta_column(self):
        code, text = run("compute", "--knot", "6_3", "--n", "1..14", "--format", "records")
        assert code == 0
        rs = records(text)
        assert [r.n for r in rs] == list(range(1, 15))
        betas = [abs(r.intermediates.get("beta_hat", 1)) for r in rs]
        assert betas == [1, 1, 7, 3, 4, 7, 43, 21, 133, 8, 397, 63, 1171, 559]

    def test_table_format(self):
        code, text = run("compute", "--knot", "6_1", "--n-max", "3")
        assert code == 0
        assert text.splitlines()[0] == "6_1 (genus 1, b=-2)"
        assert "Z_9" in text.splitlines()[2]

    def test_verify_flag(self):
        code, text = run("compute", "--knot", "7_7", "--n", "12", "--verify", "--format", "records")
        assert code == 0
        (r,) = records(text)
        assert r.verification["ok"] and r.verification["exact_sequence"]

    @pytest.mark.parametrize(
        "argv",
        [
            ("compute", "--knot", "9_99", "--n", "2"),
            ("compute", "--genus", "2", "--a", "0", "--b", "1", "--n", "2"),
            ("compute", "--genus", "1", "--b", "0", "--n", "2"),
            ("compute", "--genus", "2", "--a", "1", "--b", "1", "--n", "0"),
            ("compute", "--genus", "2", "--b", "1", "--n", "3"),
            ("compute", "--knot", "6_2"),
            ("compute", "--knot", "6_2", "--n", "x..3"),
            ("nonsense",),
        ],
    )
    def test_usage_errors(self, argv):
        code, _ = run(*argv)
        assert code == 2

    def test_unknown_knot_message(self, capsys):
        run("compute", "--knot", "9_99", "--n", "2")
        assert "unknown knot" in capsys.readouterr().err

    def test_deterministic(self):
        argv = ("compute", "--knot", "6_3", "--n", "1..10", "--format", "records", "--verify")
        assert run(*argv) == run(*argv)


class TestTable:
    def _rows(self, knot, n_max):
        code, text = run("table", "--knot", knot, "--n-max", str(n_max), "--format", "records")
        assert code == 0
        return [json.loads(line) for line in text.splitlines()]

    def test_7_7_alpha(self):
        rows = self._rows("7_7", 12)
        assert [r["alpha"] for r in rows] == [1, 1, 1, 1, 2, 1, 1, 1, 1, 8, 1, 5]

    def test_6_2_beta(self):
        rows = self._rows("6_2", 12)
        assert [r["beta"] for r in rows] == [1, 1, 5, 1, 2, 5, 29, 3, 5, 4, 131, 55]

    def test_n1(self):
        for knot in ("6_2", "6_3", "7_7", "6_1"):
            assert self._rows(knot, 1) == [{"n": 1, "alpha": 1, "beta": 1}]

    def test_genus1_labelled(self):
        code, text = run("table", "--knot", "6_1", "--n-max", "5")
        assert code == 0
        assert "genus-1" in text.splitlines()[0]
        assert text.splitlines()[2].split() == ["alpha", "1", "5", "7", "17", "31"]

    def test_human_table_cells(self):
        code, text = run("table", "--knot", "6_3", "--n-max", "14")
        lines = text.splitlines()
        assert lines[1].split() == ["n"] + [str(n) for n in range(1, 15)]
        assert lines[3].split()[1:] == "1 1 7 3 4 7 43 21 133 8 397 63 1171 559".split()


class TestVerify:
    def test_default_catalog(self):
        code, text = run("verify", "--catalog", "default", "--n-max", "12")
        assert code == 0
        assert text.strip().endswith("checked 48 cases, 0 mismatches")

    def test_small_grid(self):
        code, text = run("verify", "--a-range=-1..1", "--b-range=0..1", "--n-max", "8")
        assert code == 0
        assert "checked 32 cases" in text

    def test_genus1_grid(self):
        code, _ = run("verify", "--genus", "1", "--b-range=-2..2", "--n-max", "10")
        assert code == 0

    def test_corrupted_closed_form_fails(self, monkeypatch):
        real = oracle.closed_form_homology

        def corrupted(poly, n):
            group, cert = real(poly, n)
            if n == 5:
                group = AbelianGroup(group.free_rank, group.torsion + (group.torsion[-1] * 2,)
                                     if group.torsion else (2,))
            return group, cert

        monkeypatch.setattr(oracle, "closed_form_homology", corrupted)
        code, text = run("verify", "--catalog", "default", "--n-max", "6")
        assert code == 1
        assert "MISMATCH" in text and "closed-form" in text

    def test_empty_grid(self):
        code, _ = run("verify", "--a-range=0..0", "--n-max", "3")
        assert code == 2


class TestCatalog:
    def test_list_default(self):
        code, text = run("catalog", "list")
        assert code == 0
        names = [json.loads(line)["name"] for line in text.splitlines()]
        assert names == ["6_1", "6_2", "6_3", "7_7"]

    def test_add_and_validate(self, tmp_path):
        path = tmp_path / "knots.jsonl"
        code, _ = run("catalog", "add", "--catalog", str(path), "--name", "5_2",
                      "--genus", "1", "--b", "2", "--slope", "7/3")
        assert code == 0
        code, text = run("catalog", "validate", "--catalog", str(path))
        assert code == 0 and "1 records ok" in text
        code, text = run("compute", "--knot", "5_2", "--catalog", str(path), "--n", "2",
                         "--format", "records")
        assert records(text)[0].torsion == [7]

    def test_add_rejects_a_zero(self, tmp_path):
        path = tmp_path / "knots.jsonl"
        code, _ = run("catalog", "add", "--catalog", str(path), "--name", "x",
                      "--genus", "2", "--a", "0", "--b", "1")
        assert code == 2
        assert not path.exists()

    def test_add_rejects_duplicate(self, tmp_path):
        path = tmp_path / "knots.jsonl"
        path.write_text(cat.default_catalog_text(), encoding="utf-8")
        code, _ = run("catalog", "add", "--catalog", str(path), "--name", "6_2",
                      "--genus", "2", "--a", "-1", "--b", "2")
        assert code == 2

    def test_add_to_default_refused(self):
        code, _ = run("catalog", "add", "--name", "x", "--genus", "1", "--b", "1")
        assert code == 2

    def test_validate_duplicate_line_number(self, tmp_path, capsys):
        path = tmp_path / "dup.jsonl"
        path.write_text(
            "# comment\n"
            '{"name": "6_2", "genus": 2, "a": -1, "b": 2}\n'
            "\n"
            '{"name": "6_2", "genus": 2, "a": -1, "b": 2}\n',
            encoding="utf-8",
        )
        code, _ = run("catalog", "validate", "--catalog", str(path))
        assert code == 2
        assert f"{path}:4:" in capsys.readouterr().err

    @pytest.mark.parametrize(
        "line",
        [
            "not json",
            '{"name": "k", "genus": 1, "a": 1, "b": 2}',
            '{"name": "k", "genus": 3, "b": 2}',
            '{"name": "k", "genus": 2, "a": 0, "b": 2}',
            '{"name": "k", "genus": 2, "b": 2}',
            '{"name": "k", "genus": 1, "b": true}',
            '{"name": "", "genus": 1, "b": 1}',
            '{"name": "k", "genus": 1, "b": 1, "color": "red"}',
        ],
    )
    def test_malformed_lines(self, line):
        with pytest.raises(cat.CatalogError) as info:
            cat.parse_catalog(["# header", line])
        assert info.value.line == 2

    def test_missing_file(self, tmp_path):
        code, _ = run("catalog", "list", "--catalog", str(tmp_path / "nope.jsonl"))
        assert code == 2

    def test_catalog_round_trip(self):
        recs = cat.load_catalog()
        again = cat.parse_catalog([cat.format_record(r) for r in recs])
        assert again == recs


def test_parse_range():
    assert parse_range("5") == range(5, 6)
    assert parse_range("-3..3") == range(-3, 4)
    with pytest.raises(UsageError):
        parse_range("4..2")


ints = st.integers(-10**30, 10**30)


@given(
    st.builds(
        ResultRecord,
        knot=st.one_of(st.none(), st.text(max_size=8)),
        genus=st.sampled_from([1, 2]),
        a=st.one_of(st.none(), ints),
        b=ints,
        n=st.integers(1, 100),
        free_rank=st.integers(0, 4),
        torsion=st.lists(st.integers(2, 10**20), max_size=4),
        branch=st.sampled_from(["genus2-odd", "genus1-even"]),
        intermediates=st.dictionaries(st.sampled_from(["s", "t", "mu", "d1"]), ints),
        diagnostics=st.lists(st.text(max_size=10), max_size=2),
        verification=st.one_of(st.none(), st.fixed_dictionaries({"ok": st.booleans()})),
    )
)
def test_record_round_trip(rec):
    assert ResultRecord.from_json(rec.to_json()) == rec


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "knotcover", "compute", "--knot", "6_3", "--n", "7"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "Z_43 + Z_43" in proc.stdout
