import pytest

from edgediscrim.cli import main


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def singleton_file(tmp_path):
    path = tmp_path / "three.hg"
    path.write_text("a\nb\nc\n")
    return str(path)


class TestValidate:
    def test_valid_round_trip(self, capsys, tmp_path, singleton_file):
        code, out, _ = run(capsys, ["solve", singleton_file])
        assert code == 0
        labels = tmp_path / "three.lbl"
        labels.write_text(out)
        code, out, _ = run(capsys, ["validate", singleton_file, "--labels", str(labels)])
        assert code == 0 and out.strip() == "valid"

    def test_invalid_exits_one(self, capsys, tmp_path, singleton_file):
        labels = tmp_path / "bad.lbl"
        labels.write_text("v a 1\nv b 1\nv c 2\n")
        code, _, err = run(capsys, ["validate", singleton_file, "--labels", str(labels)])
        assert code == 1 and "both have weight 1" in err

    def test_parse_error_exits_one(self, capsys, tmp_path):
        bad = tmp_path / "bad.hg"
        bad.write_text("a\na\n")
        labels = tmp_path / "x.lbl"
        labels.write_text("v a 1\n")
        code, _, err = run(capsys, ["validate", str(bad), "--labels", str(labels)])
        assert code == 1 and "line 2" in err


class TestConstruct:
    def test_certificate_header(self, capsys, singleton_file):
        code, out, _ = run(capsys, ["construct", singleton_file])
        assert code == 0
        assert out.splitlines()[0] == "# certificate 6"
        assert "total 6" in out

    def test_order_and_init_flags(self, capsys, singleton_file):
        code, out, _ = run(
            capsys,
            ["construct", singleton_file, "--order", "c,b,a", "--init", "a=1"],
        )
        assert code == 0 and "# certificate" in out

    def test_hitting_heuristic(self, capsys, tmp_path):
        path = tmp_path / "star.hg"
        path.write_text("c 1\nc 2\nc 3\n")
        code, out, _ = run(capsys, ["construct", str(path), "--hitting-heuristic"])
        assert code == 0
        assert out.splitlines()[0] == "# certificate 4"

    def test_bad_order_exits_one(self, capsys, singleton_file):
        code, _, err = run(capsys, ["construct", singleton_file, "--order", "a,b"])
        assert code == 1 and "permutation" in err

    def test_output_feeds_validate(self, capsys, tmp_path, singleton_file):
        code, out, _ = run(capsys, ["construct", singleton_file])
        labels = tmp_path / "c.lbl"
        labels.write_text(out)
        code, out, _ = run(capsys, ["validate", singleton_file, "--labels", str(labels)])
        assert code == 0 and out.strip() == "valid"


class TestSolve:
    def test_disjoint_weight(self, capsys, singleton_file):
        code, out, _ = run(capsys, ["solve", singleton_file])
        assert code == 0
        assert "# optimal-weight 6" in out

    def test_node_cap_exit(self, capsys, tmp_path):
        path = tmp_path / "five.hg"
        path.write_text("a\nb\nc\nd\ne\n")
        code, _, err = run(capsys, ["solve", str(path), "--node-cap", "2"])
        assert code == 1 and "node cap" in err


class TestFamily:
    def test_path_weight(self, capsys):
        code, out, _ = run(capsys, ["family", "path", "--m", "5"])
        assert code == 0
        assert out.splitlines()[0] == "# family path m=5 weight=5"

    def test_out_hg_and_validate_loop(self, capsys, tmp_path):
        hg_path = tmp_path / "c6.hg"
        code, out, _ = run(capsys, ["family", "cycle", "--m", "6", "--out-hg", str(hg_path)])
        assert code == 0
        labels = tmp_path / "c6.lbl"
        labels.write_text(out)
        code, out, _ = run(capsys, ["validate", str(hg_path), "--labels", str(labels)])
        assert code == 0 and out.strip() == "valid"

    def test_rpartite(self, capsys):
        code, out, _ = run(capsys, ["family", "rpartite", "--sizes", "2,2"])
        assert code == 0
        assert out.splitlines()[0] == "# family rpartite sizes=2,2 weight=5"

    def test_missing_m_exits_one(self, capsys):
        code, _, err = run(capsys, ["family", "path"])
        assert code == 1 and "--m" in err

    def test_unknown_kind_usage_error(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["family", "wheel", "--m", "5"])
        assert info.value.code == 2


class TestBounds:
    def test_report(self, capsys, singleton_file):
        code, out, _ = run(capsys, ["bounds", singleton_file])
        assert code == 0
        assert "lower 6" in out and "upper-general 6" in out


class TestCensus:
    def test_three_edges(self, capsys):
        code, out, _ = run(capsys, ["census", "--n", "3"])
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n=3 instances=128"
        assert "w=5 non-attainable" in lines

    def test_conjecture_flag(self, capsys):
        code, out, _ = run(capsys, ["census", "--n", "3", "--conjecture"])
        assert code == 0
        assert out.splitlines()[-1] == "conjecture n=3 interval=[5,5] attained="

    def test_too_large_exits_one(self, capsys):
        code, _, err = run(capsys, ["census", "--n", "6"])
        assert code == 1 and "n <= 4" in err


class TestSidon:
    def test_generate(self, capsys):
        code, out, _ = run(capsys, ["sidon", "--h", "2", "--count", "5"])
        assert code == 0 and out.strip() == "1 2 4 8 13"

    def test_label_validate_loop(self, capsys, tmp_path):
        hg_path = tmp_path / "k42.hg"
        hg_path.write_text("a b\na c\na d\nb c\nb d\nc d\n")
        code, out, _ = run(capsys, ["sidon", "label", str(hg_path), "--r", "2"])
        assert code == 0
        assert out.splitlines()[0] == "# sidon r=2 weight=15"
        labels = tmp_path / "k42.lbl"
        labels.write_text(out)
        code, out, _ = run(capsys, ["validate", str(hg_path), "--labels", str(labels)])
        assert code == 0 and out.strip() == "valid"

    def test_wrong_uniformity_exits_one(self, capsys, tmp_path):
        hg_path = tmp_path / "mixed.hg"
        hg_path.write_text("a b\nc\n")
        code, _, err = run(capsys, ["sidon", "label", str(hg_path)])
        assert code == 1 and "edge 2" in err

    def test_missing_flags_exit_one(self, capsys):
        code, _, err = run(capsys, ["sidon"])
        assert code == 1 and "usage" in err


class TestGeom:
    def test_three_disjoint_squares(self, capsys, tmp_path):
        rg = tmp_path / "d.rg"
        rg.write_text("rect 0 0 1 1\nrect 2 0 3 1\nrect 4 0 5 1\n")
        code, out, _ = run(capsys, ["geom", str(rg)])
        assert code == 0
        assert out.splitlines()[-1] == "total 6"

    def test_bad_region_exits_one(self, capsys, tmp_path):
        rg = tmp_path / "bad.rg"
        rg.write_text("interval 1 1\n")
        code, _, err = run(capsys, ["geom", str(rg)])
        assert code == 1


class TestReport:
    def test_census_writes_tsv_and_png(self, capsys, tmp_path):
        outdir = tmp_path / "out"
        code, out, _ = run(capsys, ["report", "census", "--n", "2", "--outdir", str(outdir)])
        assert code == 0
        paths = out.splitlines()
        assert [p.rsplit("/", 1)[1] for p in paths] == ["census_n2.tsv", "census_n2.png"]
        for p in paths:
            assert (tmp_path / "out" / p.rsplit("/", 1)[1]).stat().st_size > 0
        tsv = (outdir / "census_n2.tsv").read_text()
        assert tsv.splitlines()[0] == "weight\tstatus\twitness"

    def test_geom_writes_figure(self, capsys, tmp_path):
        rg = tmp_path / "g.rg"
        rg.write_text("rect 0 0 2 2\nrect 1 1 3 3\n")
        outdir = tmp_path / "out"
        code, out, _ = run(capsys, ["report", "geom", str(rg), "--outdir", str(outdir)])
        assert code == 0
        names = sorted(p.rsplit("/", 1)[1] for p in out.splitlines())
        assert names == ["g.png", "g_points.tsv", "g_regions.tsv"]


class TestDeterminism:
    def test_census_output_stable(self, capsys):
        _, first, _ = run(capsys, ["census", "--n", "3"])
        _, second, _ = run(capsys, ["census", "--n", "3"])
        assert first == second

    def test_solve_output_stable(self, capsys, singleton_file):
        _, first, _ = run(capsys, ["solve", singleton_file])
        _, second, _ = run(capsys, ["solve", singleton_file])
        assert first == second
