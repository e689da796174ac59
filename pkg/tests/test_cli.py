import json

from treebed.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


def test_wirelength_single_binary(capsys):
    code, data, _ = run_json(capsys, "wirelength", "--n", "3", "--p", "2")
    assert code == 0
    assert data["direct"] == data["via_partition"] == data["closed_form"] == 54
    assert data["host_kind"] == "binary"
    assert data["cut_conditions_ok"] is True
    assert list(data) == [
        "schema",
        "n",
        "p",
        "n1",
        "k",
        "host_kind",
        "direct",
        "via_partition",
        "closed_form",
        "cut_conditions_ok",
        "per_cut",
    ]


def test_wirelength_single_sibling(capsys):
    code, data, _ = run_json(
        capsys, "wirelength", "--n", "3", "--p", "2", "--host", "sibling"
    )
    assert code == 0
    assert data["direct"] == 45
    assert data["host_kind"] == "sibling"


def test_wirelength_chain(capsys):
    code, data, _ = run_json(
        capsys, "wirelength", "--n", "3", "--p", "2", "--n1", "2"
    )
    assert code == 0
    assert data["direct"] == 60
    assert data["k"] == 2
    assert any(cut["family"] == "ROOT" for cut in data["per_cut"])


def test_wirelength_text_output(capsys):
    code, out, _ = run(
        capsys, "wirelength", "--n", "3", "--p", "2", "--output", "text"
    )
    assert code == 0
    assert "direct        = 54" in out
    assert "cut_conditions_ok = true" in out


def test_wirelength_is_deterministic(capsys):
    first = run(capsys, "wirelength", "--n", "3", "--p", "2", "--host", "sibling")
    second = run(capsys, "wirelength", "--n", "3", "--p", "2", "--host", "sibling")
    assert first == second


def test_wirelength_exhaustive(capsys):
    code, data, _ = run_json(
        capsys, "wirelength", "--n", "3", "--p", "2", "--host", "sibling",
        "--exhaustive",
    )
    assert code == 0
    assert data["exhaustive_min"] == 45
    assert list(data)[9] == "exhaustive_min"


def test_wirelength_exhaustive_cap(capsys):
    code, out, err = run(
        capsys, "wirelength", "--n", "4", "--p", "2", "--exhaustive"
    )
    assert code == 2
    assert out == ""
    assert "exhaustive search is capped" in err


def test_wirelength_budget(capsys):
    code, _, err = run(
        capsys, "wirelength", "--n", "3", "--p", "2", "--exhaustive",
        "--budget", "10",
    )
    assert code == 2
    assert "budget" in err


def test_wirelength_engine_cap(capsys):
    code, _, err = run(capsys, "wirelength", "--n", "9", "--p", "2")
    assert code == 2
    assert "capped" in err


def test_wirelength_local_search(capsys):
    code, data, _ = run_json(
        capsys, "wirelength", "--n", "3", "--p", "2",
        "--local-search", "5", "--seed", "0",
    )
    assert code == 0
    assert data["local_search_min"] == 54

    code, _, err = run(
        capsys, "wirelength", "--n", "3", "--p", "2", "--local-search", "5"
    )
    assert code == 2
    assert "--seed" in err


def test_wirelength_swap_same_partite_stays_optimal(capsys):
    code, data, _ = run_json(
        capsys, "wirelength", "--n", "3", "--p", "2", "--swap", "1", "5"
    )
    assert code == 0
    assert data["direct"] == 54
    assert data["cut_conditions_ok"] is True


def test_wirelength_swap_across_partites_fails(capsys):
    code, data, _ = run_json(
        capsys, "wirelength", "--n", "3", "--p", "2", "--swap", "1", "7"
    )
    assert code == 1
    assert data["direct"] == 58
    assert data["cut_conditions_ok"] is False


def test_wirelength_variant_needs_sibling(capsys):
    code, _, err = run(
        capsys, "wirelength", "--n", "3", "--p", "2", "--variant", "1"
    )
    assert code == 2
    assert "sibling" in err


def test_wirelength_variants_agree(capsys):
    values = set()
    for variant in "0123":
        code, data, _ = run_json(
            capsys, "wirelength", "--n", "3", "--p", "2",
            "--host", "sibling", "--variant", variant,
        )
        assert code == 0
        values.add(data["direct"])
    assert values == {45}


def test_verify_json(capsys):
    code, data, _ = run_json(capsys, "verify", "--n", "3", "--p", "2")
    assert code == 0
    assert data["partition_matches_direct"] is True
    assert data["cut_conditions_ok"] is True
    assert len(data["per_cut"]) == 7
    first = data["per_cut"][0]
    assert first["family"] == "S"
    assert first["ec"] == first["lemma_value"] == 6
    assert first["ok"] is True


def test_verify_corrupted(capsys):
    code, data, _ = run_json(
        capsys, "verify", "--n", "3", "--p", "2", "--swap", "1", "7"
    )
    assert code == 1
    assert data["cut_conditions_ok"] is False
    assert any(row["ok"] is False for row in data["per_cut"])


def test_verify_text(capsys):
    code, out, _ = run(
        capsys, "verify", "--n", "3", "--p", "2", "--output", "text"
    )
    assert code == 0
    assert "S(j=1, i=1): ec=6 lemma=6 ok" in out
    assert "direct=54 via_partition=54 -> ok" in out


def test_guest_json(capsys):
    code, data, _ = run_json(capsys, "guest", "--n", "3", "--p", "2")
    assert code == 0
    assert data["vertex_count"] == 8
    assert data["edge_count"] == 24
    assert data["degree"] == 6
    assert data["partites"] == [[1, 5], [2, 6], [3, 7], [4, 8]]


def test_host_json(capsys):
    code, data, _ = run_json(
        capsys, "host", "--n1", "2", "--k", "2", "--host", "sibling"
    )
    assert code == 0
    assert data["vertex_count"] == 8
    assert data["edge_count"] == 9
    assert data["sibling_edge_count"] == 2
    assert data["level_counts"] == {"0": 2, "1": 2, "2": 4}
    assert data["label_of"]["4"] == 4


def test_sweep_small_grid(capsys):
    code, out, _ = run(
        capsys, "sweep", "--n-min", "2", "--n-max", "3", "--exhaustive"
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].startswith("n,p,n1,k,host,closed_form")
    assert len(lines) == 1 + 16
    assert lines[1] == "2,2,1,2,binary,10,10,10,10,true,true,true,true"
    assert all(",false" not in line for line in lines[1:])


def test_sweep_fixed_p_binary_only(capsys):
    code, out, _ = run(
        capsys, "sweep", "--n-min", "2", "--n-max", "4",
        "--p", "2", "--host", "binary",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 1 + 9


def test_sweep_empty_range(capsys):
    code, out, _ = run(capsys, "sweep", "--n-min", "3", "--n-max", "2")
    assert code == 0
    assert out.strip().split("\n") == ["n,p,n1,k,host,closed_form,direct,"
                                       "via_partition,exhaustive_min,"
                                       "formula_matches_direct,"
                                       "partition_matches_direct,"
                                       "exhaustive_matches_closed_form,"
                                       "cut_conditions_ok"]


def test_sweep_json_output(capsys):
    code, data, _ = run_json(
        capsys, "sweep", "--n-min", "2", "--n-max", "2", "--output", "json"
    )
    assert code == 0
    # two n1 values times two host kinds
    assert len(data) == 4
    by_key = {(row["n1"], row["host"]): row for row in data}
    assert by_key[(2, "binary")]["closed_form"] == 9
    assert by_key[(2, "sibling")]["closed_form"] == 8
    assert all(row["exhaustive_min"] is None for row in data)


def test_sweep_formula_only_scales(capsys):
    code, out, _ = run(
        capsys, "sweep", "--n-min", "12", "--n-max", "12",
        "--p", "2", "--n1", "6", "--engine", "off",
    )
    assert code == 0
    row = out.strip().split("\n")[1].split(",")
    assert row[:5] == ["12", "2", "6", "64", "binary"]
    assert int(row[5]) > 0
    assert row[6] == ""


def test_sweep_caps(capsys):
    code, _, err = run(capsys, "sweep", "--n-min", "2", "--n-max", "21")
    assert code == 2 and "capped" in err
    code, _, err = run(
        capsys, "sweep", "--n-min", "2", "--n-max", "9", "--engine", "on"
    )
    assert code == 2 and "capped" in err
    code, _, err = run(
        capsys, "sweep", "--n-min", "2", "--n-max", "4", "--exhaustive"
    )
    assert code == 2 and "capped" in err


def test_export_dot_host(capsys):
    code, out, _ = run(
        capsys, "export-dot", "host", "--n1", "3", "--host", "sibling"
    )
    assert code == 0
    assert out.startswith("graph host {")
    assert out.count("[style=dashed]") == 3
    assert out.count("rank=same") == 4


def test_export_dot_chain_is_bold(capsys):
    code, out, _ = run(capsys, "export-dot", "host", "--n1", "2", "--k", "2")
    assert code == 0
    assert out.count("[style=bold]") == 1
    assert "4 -- 8 [style=bold];" in out


def test_export_dot_guest(capsys):
    code, out, _ = run(capsys, "export-dot", "guest", "--n", "3", "--p", "2")
    assert code == 0
    assert out.count("subgraph cluster_") == 4
    assert sum(1 for line in out.split("\n") if " -- " in line) == 24


def test_export_dot_to_file(tmp_path, capsys):
    target = tmp_path / "host.dot"
    code, out, _ = run(
        capsys, "export-dot", "host", "--n1", "2", "--out", str(target)
    )
    assert code == 0
    assert out == ""
    code, direct, _ = run(capsys, "export-dot", "host", "--n1", "2")
    assert target.read_text(encoding="utf-8") == direct


def test_export_dot_validation(capsys):
    code, _, err = run(capsys, "export-dot", "guest", "--n", "9", "--p", "2")
    assert code == 2 and "capped" in err
    code, _, err = run(capsys, "export-dot", "guest")
    assert code == 2
    code, _, err = run(capsys, "export-dot", "host", "--n1", "11")
    assert code == 2 and "1024" in err


def test_usage_errors(capsys):
    assert run(capsys, "no-such-command")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "wirelength", "--n", "3")[0] == 2
