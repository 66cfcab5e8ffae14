import json

from homgroups import SearchConfig, enumerate_hom_groups, fixture, relabel
from homgroups.cli import (
    dumps_document,
    document_to_hom_group,
    hom_group_to_document,
    main,
    parse_document,
    render_text,
)

Z3A_TEXT = """\
* | 1 a b
--+------
1 | 1 b a
a | b a 1
b | a 1 b"""

CLASSIFY3_TEXT = """\
order: 3
include-groups: false
structures: 1
iso-classes: 1
structure 1:
* | 0 1 2
--+------
0 | 0 2 1
1 | 2 1 0
2 | 1 0 2
"""


def write_fixture(tmp_path, name):
    path = tmp_path / f"{name}.json"
    path.write_text(dumps_document(hom_group_to_document(fixture(name))) + "\n")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestVerifyCommand:
    def test_valid_document(self, tmp_path, capsys):
        code, out = run(capsys, "verify", write_fixture(tmp_path, "z6a"))
        assert code == 0
        assert out == "order: 6\nvalid: true\n"

    def test_corrupted_cell_flags_column(self, tmp_path, capsys):
        doc = hom_group_to_document(fixture("z6a"))
        doc["table"][2][3], doc["table"][2][4] = doc["table"][2][4], doc["table"][2][3]
        path = tmp_path / "bad.json"
        path.write_text(dumps_document(doc))
        code, out = run(capsys, "verify", str(path))
        assert code == 1
        assert "violation: latin-col (3,2,3)" in out
        assert out.rstrip().splitlines()[-1] == "error: invalid-structure"

    def test_empty_file_is_a_parse_error(self, tmp_path, capsys):
        path = tmp_path / "empty.json"
        path.write_text("")
        code, out = run(capsys, "verify", str(path))
        assert code == 2
        assert out.rstrip().splitlines()[-1] == "error: parse-error"

    def test_unknown_keys_rejected(self, tmp_path, capsys):
        doc = hom_group_to_document(fixture("z3a"))
        doc["extra"] = 1
        path = tmp_path / "extra.json"
        path.write_text(json.dumps(doc))
        code, out = run(capsys, "verify", str(path))
        assert code == 2
        assert out.rstrip().splitlines()[-1] == "error: parse-error"

    def test_missing_file(self, capsys):
        code, out = run(capsys, "verify", "/nonexistent/x.json")
        assert code == 2
        assert out.rstrip().splitlines()[-1] == "error: parse-error"


class TestClassifyCommand:
    def test_order_three_golden(self, capsys):
        code, out = run(capsys, "classify", "--order", "3")
        assert code == 0
        assert out == CLASSIFY3_TEXT

    def test_order_two_empty(self, capsys):
        code, out = run(capsys, "classify", "--order", "2")
        assert code == 0
        assert "structures: 0" in out

    def test_deterministic(self, capsys):
        _, first = run(capsys, "classify", "--order", "4", "--up-to-iso")
        _, second = run(capsys, "classify", "--order", "4", "--up-to-iso")
        assert first == second

    def test_guard_refused(self, capsys):
        code, out = run(capsys, "classify", "--order", "7")
        assert code == 2
        assert out.rstrip().splitlines()[-1] == "error: guard-refused"

    def test_emit_writes_loadable_documents(self, tmp_path, capsys):
        out_dir = tmp_path / "reps"
        code, out = run(
            capsys, "classify", "--order", "3", "--include-groups", "--emit", str(out_dir)
        )
        assert code == 0
        files = sorted(out_dir.iterdir())
        assert [f.name for f in files] == [
            "homgroup_order3_001.json",
            "homgroup_order3_002.json",
        ]
        for f in files:
            document_to_hom_group(parse_document(str(f)))


class TestSubgroupsCommand:
    def test_z6a_listing(self, tmp_path, capsys):
        code, out = run(capsys, "subgroups", write_fixture(tmp_path, "z6a"))
        assert code == 0
        assert out == "{0}\n{0,3}\n{0,2,4}\n{0,1,2,3,4,5}\n"

    def test_invalid_document_tagged(self, tmp_path, capsys):
        doc = hom_group_to_document(fixture("z6a"))
        doc["alpha"] = [0, 1, 2, 3, 4, 5]
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        code, out = run(capsys, "subgroups", str(path))
        assert code == 2
        assert out.rstrip().splitlines()[-1] == "error: invalid-structure"


class TestCosetsCommand:
    def test_single_coset(self, tmp_path, capsys):
        path = write_fixture(tmp_path, "z6a")
        code, out = run(
            capsys, "cosets", path, "--subgroup", "0,3", "--element", "1", "--side", "left"
        )
        assert code == 0
        assert out == "{2,5}\n"

    def test_partition(self, tmp_path, capsys):
        path = write_fixture(tmp_path, "z6a")
        code, out = run(capsys, "cosets", path, "--subgroup", "0,3")
        assert code == 0
        assert out == "{0,3}\n{2,5}\n{1,4}\n"

    def test_right_side(self, tmp_path, capsys):
        path = write_fixture(tmp_path, "d3a")
        code, out = run(
            capsys, "cosets", path, "--subgroup", "0,1,2", "--element", "3", "--side", "right"
        )
        assert code == 0
        assert out == "{3,4,5}\n"

    def test_non_subgroup_names_failed_closure(self, tmp_path, capsys):
        path = write_fixture(tmp_path, "z6a")
        code, out = run(capsys, "cosets", path, "--subgroup", "0,1")
        assert code == 2
        assert "not closed under product" in out
        assert out.rstrip().splitlines()[-1] == "error: domain-error"

    def test_bad_subset_syntax(self, tmp_path, capsys):
        path = write_fixture(tmp_path, "z6a")
        code, out = run(capsys, "cosets", path, "--subgroup", "0;1")
        assert code == 2
        assert out.rstrip().splitlines()[-1] == "error: domain-error"


class TestLagrangeCommand:
    def test_z5a_golden(self, tmp_path, capsys):
        code, out = run(capsys, "lagrange", write_fixture(tmp_path, "z5a"))
        assert code == 0
        assert out == (
            "|G| = 5\n"
            "H={0} |H|=1 index=5\n"
            "H={0,1,2,3,4} |H|=5 index=1\n"
            "divisors: 1, 5\n"
        )

    def test_z6a_divisor_line(self, tmp_path, capsys):
        code, out = run(capsys, "lagrange", write_fixture(tmp_path, "z6a"))
        assert code == 0
        assert out.rstrip().splitlines()[-1] == "divisors: 1, 2, 3, 6"


class TestCauchyCommand:
    def test_z6a_golden(self, tmp_path, capsys):
        code, out = run(capsys, "cauchy", write_fixture(tmp_path, "z6a"))
        assert code == 0
        assert out == "|G| = 6\np=2: {0,3}\np=3: {0,2,4}\n"

    def test_missing_witness_prints_none(self, tmp_path, capsys):
        from homgroups import HomGroup

        klein_twist = HomGroup(
            ((0, 2, 3, 1), (2, 0, 1, 3), (3, 1, 0, 2), (1, 3, 2, 0)), (0, 2, 3, 1), 0
        )
        path = tmp_path / "kt.json"
        path.write_text(dumps_document(hom_group_to_document(klein_twist)))
        code, out = run(capsys, "cauchy", str(path))
        assert code == 0
        assert out == "|G| = 4\np=2: none\n"


class TestTwistCommand:
    def test_negation_twist_matches_fixture_bytes(self, tmp_path, capsys):
        code, out = run(capsys, "twist", "--group", "zn:6", "--auto", "0,5,4,3,2,1")
        assert code == 0
        assert out == dumps_document(hom_group_to_document(fixture("z6a"))) + "\n"

    def test_conjugation_twist_matches_the_d3a_table(self, capsys, d3a):
        code, out = run(capsys, "twist", "--group", "dn:3", "--conjugate", "3")
        assert code == 0
        doc = json.loads(out)
        assert doc["table"] == [list(r) for r in d3a.table.entries]
        assert doc["alpha"] == list(d3a.alpha.images)

    def test_identity_twist_gives_the_group(self, capsys):
        code, out = run(capsys, "twist", "--group", "zn:6", "--auto", "0,1,2,3,4,5")
        assert code == 0
        doc = json.loads(out)
        assert doc["alpha"] == [0, 1, 2, 3, 4, 5]
        assert doc["table"][2][3] == 5

    def test_list_autos(self, capsys):
        code, out = run(capsys, "twist", "--group", "zn:6", "--list-autos")
        assert code == 0
        assert out == "0,1,2,3,4,5\n0,5,4,3,2,1\n"

    def test_non_automorphism_rejected(self, capsys):
        code, out = run(capsys, "twist", "--group", "zn:6", "--auto", "0,2,1,3,4,5")
        assert code == 2
        assert "witness pair" in out
        assert out.rstrip().splitlines()[-1] == "error: not-automorphism"

    def test_document_operand_must_be_plain_group(self, tmp_path, capsys):
        path = write_fixture(tmp_path, "z6a")
        code, out = run(capsys, "twist", "--group", path, "--auto", "0,5,4,3,2,1")
        assert code == 2
        assert out.rstrip().splitlines()[-1] == "error: domain-error"

    def test_document_operand_group_roundtrip(self, tmp_path, capsys):
        code, out = run(capsys, "twist", "--group", "zn:6", "--auto", "0,1,2,3,4,5")
        path = tmp_path / "z6_group.json"
        path.write_text(out)
        code, out = run(capsys, "twist", "--group", str(path), "--auto", "0,5,4,3,2,1")
        assert code == 0
        assert json.loads(out)["table"] == [list(r) for r in fixture("z6a").table.entries]


class TestHopfCommand:
    def test_dims_z6a(self, tmp_path, capsys):
        code, out = run(capsys, "hopf", write_fixture(tmp_path, "z6a"), "--dims")
        assert code == 0
        assert out == "dims: 1, 2, 3, 6\n|G| = 6\nall divide |G|: true\n"

    def test_dims_z5a(self, tmp_path, capsys):
        code, out = run(capsys, "hopf", write_fixture(tmp_path, "z5a"), "--dims")
        assert code == 0
        assert out.startswith("dims: 1, 5\n")

    def test_check_passes(self, tmp_path, capsys):
        code, out = run(capsys, "hopf", write_fixture(tmp_path, "z6a"), "--check")
        assert code == 0
        assert out == "valid: true\n"


class TestCayleyCommand:
    def test_text_matches_stock_layout(self, tmp_path, capsys):
        code, out = run(capsys, "cayley", write_fixture(tmp_path, "z3a"))
        assert code == 0
        assert out == Z3A_TEXT + "\n"

    def test_csv_rows(self, tmp_path, capsys):
        code, out = run(capsys, "cayley", write_fixture(tmp_path, "z6a"), "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "0,5,4,3,2,1"
        assert lines[5] == "1,0,5,4,3,2"
        assert out.endswith("\n")

    def test_json_roundtrip(self, tmp_path, capsys):
        path = write_fixture(tmp_path, "d3a")
        code, out = run(capsys, "cayley", path, "--format", "json")
        assert code == 0
        assert document_to_hom_group(json.loads(out)) == fixture("d3a")

    def test_unknown_format_is_usage_error(self, tmp_path, capsys):
        path = write_fixture(tmp_path, "z3a")
        code, out = run(capsys, "cayley", path, "--format", "yaml")
        assert code == 2
        assert out.rstrip().splitlines()[-1] == "error: usage-error"


class TestDocumentLayer:
    def test_roundtrip_fixtures(self, tmp_path, stock_fixture):
        path = tmp_path / "g.json"
        path.write_text(dumps_document(hom_group_to_document(stock_fixture)))
        assert document_to_hom_group(parse_document(str(path))) == stock_fixture

    def test_roundtrip_enumerated(self, tmp_path):
        idx = 0
        for n in range(1, 5):
            for G in enumerate_hom_groups(SearchConfig(order=n, include_groups=True)):
                path = tmp_path / f"g{idx}.json"
                path.write_text(dumps_document(hom_group_to_document(G)))
                assert document_to_hom_group(parse_document(str(path))) == G
                idx += 1

    def test_nonzero_unit_documents_load(self, z3a):
        moved = relabel(z3a, (1, 0, 2))
        doc = hom_group_to_document(moved)
        assert doc["unit"] == 1
        assert document_to_hom_group(doc) == moved

    def test_rendering_is_relabeling_invariant(self, z3a):
        # unit-first display plus label transport makes the rendered grid
        # independent of the index order
        moved = relabel(z3a, (1, 0, 2))
        assert render_text(moved) == render_text(z3a)


class TestErrorSurface:
    def test_unknown_command_is_usage_error(self, capsys):
        code, out = run(capsys, "frobnicate")
        assert code == 2
        assert out.rstrip().splitlines()[-1] == "error: usage-error"

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0
