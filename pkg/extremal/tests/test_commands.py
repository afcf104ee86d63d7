from io import BytesIO, StringIO
from types import SimpleNamespace

import pytest
from django.core.management import CommandError, call_command, load_command_class

from core.helpers import EXIT_USAGE, EXIT_VIOLATION
from core.models.graph import Graph
from core.utils.graph6_utils import encode_graph6, write_graph6
from extremal.models import SweepRecord, SweepRun
from extremal.utils.enumeration_utils import EnumerationMode
from extremal.utils.oracle_utils import check_theorem
from extremal.utils.sweep_utils import record_sweep


def run(name, *args, **options):
    out = StringIO()
    call_command(name, *args, stdout=out, **options)
    return out.getvalue().splitlines()


@pytest.fixture
def graph_file(tmp_path):
    def write(text, name="graphs.txt"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write


def test_chi(graph_file):
    path = graph_file(write_graph6([Graph.cycle(5), Graph.complete(4), Graph.petersen()]))
    assert run("chi", path) == ["chi=3", "chi=4", "chi=3"]


def test_chi_witness(graph_file):
    path = graph_file("3 2\n0 1\n1 2\n")
    assert run("chi", path, witness=True) == ["chi=2 0:0 1:1 2:0"]


def test_chi_accepts_disconnected_graphs(graph_file):
    assert run("chi", graph_file("3 1\n0 1\n")) == ["chi=2"]


def test_gap_line(graph_file):
    assert run("gap", graph_file("Dhc\n")) == ["n=5 m=5 chi=3 gap=0"]


def test_gap_edge_list_input(graph_file):
    path = graph_file("4 4\n0 1\n1 2\n2 3\n3 0\n")
    assert run("gap", path, format="edgelist") == ["n=4 m=4 chi=2 gap=1"]


def test_classify(graph_file):
    path = graph_file(write_graph6([Graph.petersen(), Graph.star(3), Graph.cycle(7)]))
    lines = run("classify", path)
    assert lines[0].startswith("Neither")
    assert lines[1] == "TypeA m=1 core=3"
    assert lines[2] == "TypeB len=7 core=0,1,2,3,4,5,6"


@pytest.mark.parametrize("name", ["gap", "classify"])
def test_disconnected_input_is_a_usage_error(graph_file, name):
    with pytest.raises(CommandError) as excinfo:
        run(name, graph_file("3 1\n0 1\n"))
    assert excinfo.value.returncode == EXIT_USAGE


@pytest.mark.parametrize("text", ["D\n", "3 2\n0 1\n", "\n"])
def test_malformed_input_is_a_usage_error(graph_file, text):
    with pytest.raises(CommandError) as excinfo:
        run("chi", graph_file(text))
    assert excinfo.value.returncode == EXIT_USAGE


def test_missing_file_is_a_usage_error(tmp_path):
    with pytest.raises(CommandError) as excinfo:
        run("chi", str(tmp_path / "missing.g6"))
    assert excinfo.value.returncode == EXIT_USAGE


def test_verify_table():
    lines = run("verify", max_n=4, jobs=1)
    assert lines == [
        "n\tmode\tconnected\textremal\tcounterexamples",
        "1\tlabeled\t1\t1\t0",
        "2\tlabeled\t1\t1\t0",
        "3\tlabeled\t4\t4\t0",
        "4\tlabeled\t38\t29\t0",
    ]


def test_verify_unlabeled():
    lines = run("verify", max_n=5, mode="unlabeled", jobs=1)
    assert lines[-1].split("\t")[:3] == ["5", "unlabeled", "21"]


def test_verify_output_does_not_depend_on_jobs():
    assert run("verify", max_n=5, jobs=1) == run("verify", max_n=5, jobs=2)


@pytest.mark.slow
def test_verify_output_at_six_does_not_depend_on_jobs():
    single = run("verify", max_n=6, jobs=1)
    assert single[-1] == "6\tlabeled\t26704\t4207\t0"
    assert single == run("verify", max_n=6, jobs=2)


def test_verify_sample():
    lines = run("verify", max_n=8, sample=100, seed=3, jobs=1)
    row = lines[1].split("\t")
    assert row[:2] == ["8", "sampled"]
    assert row[-1] == "0"
    assert lines == run("verify", max_n=8, sample=100, seed=3, jobs=2)


@pytest.mark.parametrize(
    "options",
    [
        {"max_n": 9},
        {"max_n": 8},
        {"max_n": 0},
        {"max_n": 4, "mode": "random"},
        {"max_n": 4, "jobs": -1},
        {"max_n": 8, "sample": 10, "mode": "unlabeled"},
    ],
)
def test_verify_usage_errors(options):
    with pytest.raises(CommandError) as excinfo:
        run("verify", **options)
    assert excinfo.value.returncode == EXIT_USAGE


def test_check_lemmas():
    lines = run("check_lemmas", trials=3, seed=1, max_n=4, max_vertices=12)
    assert [line.split("\t")[:2] for line in lines] == [
        ["decorated_chi", "PASS"],
        ["pendant_closure", "PASS"],
        ["lemma_big", "PASS"],
        ["removal_heredity", "PASS"],
        ["induction_step", "PASS"],
    ]
    assert lines[0].split("\t")[2] == "9"


def test_check_lemmas_usage_error():
    with pytest.raises(CommandError) as excinfo:
        run("check_lemmas", max_vertices=30)
    assert excinfo.value.returncode == EXIT_USAGE


def test_gen_then_classify(graph_file):
    lines = run("gen", kind="typeA", core=4, trees="0:2,3", seed=7, count=5)
    assert len(lines) == 5
    assert lines == run("gen", kind="typeA", core=4, trees="0:2,3", seed=7, count=5)
    classified = run("classify", graph_file("\n".join(lines) + "\n"))
    assert classified == ["TypeA m=4 core=0,1,2,3"] * 5


def test_gen_cycle_kinds(graph_file):
    odd = run("gen", kind="typeB", core=5, trees="2")
    even = run("gen", kind="cycle", core=6, trees="1:1")
    assert run("classify", graph_file(odd[0] + "\n"))[0].startswith("TypeB len=5")
    assert run("classify", graph_file(even[0] + "\n"))[0].startswith("Neither")
    assert run("gap", graph_file(odd[0] + "\n")) == ["n=7 m=7 chi=3 gap=0"]


@pytest.mark.parametrize(
    "options",
    [
        {"kind": "typeB", "core": 3},
        {"kind": "typeB", "core": 4},
        {"kind": "typeB", "core": 1},
        {"kind": "typeA", "core": 3, "trees": "3:1"},
        {"kind": "typeA", "core": 3, "trees": "x"},
        {"kind": "star", "core": 3},
    ],
)
def test_gen_usage_errors(options):
    with pytest.raises(CommandError) as excinfo:
        run("gen", **options)
    assert excinfo.value.returncode == EXIT_USAGE


@pytest.mark.django_db
def test_verify_record_stores_runs():
    run("verify", max_n=3, jobs=1, record=True)
    run("verify", max_n=3, jobs=1, record=True)
    assert SweepRun.objects.count() == 2
    assert SweepRecord.objects.count() == 6
    latest = SweepRun.objects.first()
    assert latest.passed
    assert [record.extremal_count for record in latest.records.all()] == [1, 1, 4]


@pytest.mark.django_db
def test_verify_record_reports_drift():
    summaries = check_theorem(3, EnumerationMode.LABELED)
    summaries[-1].extremal_count -= 1
    record_sweep(summaries, EnumerationMode.LABELED, 3, jobs=1)

    with pytest.raises(CommandError) as excinfo:
        run("verify", max_n=3, jobs=1, record=True)
    assert excinfo.value.returncode == EXIT_VIOLATION
    assert "extremal_count" in str(excinfo.value)


def test_gap_on_petersen(graph_file):
    line = encode_graph6(Graph.petersen())
    assert run("gap", graph_file(line + "\n")) == ["n=10 m=15 chi=3 gap=5"]


@pytest.mark.parametrize(
    "argv, code",
    [
        (["gap", "--format", "edgelist"], EXIT_USAGE),
        (["verify", "--max-n", "9"], EXIT_USAGE),
        (["verify", "--max-n", "3", "--jobs", "1"], None),
    ],
)
def test_exit_status_from_argv(graph_file, argv, code):
    if argv[0] == "gap":
        argv = [*argv, graph_file("3 1\n0 1\n")]
    command = load_command_class("extremal", argv[0])
    if code is None:
        command.run_from_argv(["manage.py", *argv])
        return
    with pytest.raises(SystemExit) as excinfo:
        command.run_from_argv(["manage.py", *argv])
    assert excinfo.value.code == code


def test_stdin_input(monkeypatch):
    monkeypatch.setattr("sys.stdin", SimpleNamespace(buffer=BytesIO(b"Dhc\n")))
    assert run("classify") == ["TypeB len=5 core=0,1,2,3,4"]


def test_undecodable_stdin_is_a_usage_error(monkeypatch):
    monkeypatch.setattr("sys.stdin", SimpleNamespace(buffer=BytesIO(b"\xff\xfe")))
    with pytest.raises(CommandError) as excinfo:
        run("gap")
    assert excinfo.value.returncode == EXIT_USAGE
    assert "stdin" in str(excinfo.value)


def test_triangle_is_generated_as_type_a(graph_file):
    with pytest.raises(CommandError, match="typeA"):
        run("gen", kind="typeB", core=3)
    triangle = run("gen", kind="typeA", core=3)
    assert run("classify", graph_file(triangle[0] + "\n")) == ["TypeA m=3 core=0,1,2"]
