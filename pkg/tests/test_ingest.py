import time

import pytest

from couplaw import parse_source, scan_tree, save_summaries, load_summaries
from couplaw.errors import DuplicateClass, EmptyCorpus, FormatError, MalformedSource
from couplaw.ingest import Corpus, parse_compilation_unit
from couplaw.synth import SynthParams, generate

from conftest import FIXTURES


def test_single_field_single_method():
    src = """
    class StringFileReader {
        String lastString;
        String readString() { return lastString; }
    }
    """
    (summary,) = parse_source(src, "StringFileReader.java")
    assert summary.qualified_name == "StringFileReader"
    assert summary.fields == (("lastString", "String"),)
    assert summary.methods == (("readString", "String", ()),)
    assert summary.constructors == ()


def test_empty_class():
    (summary,) = parse_source("class A {}")
    assert summary.qualified_name == "A"
    assert summary.kind == "class"
    assert summary.superclass is None
    assert summary.fields == () and summary.methods == ()
    assert summary.constructors == ()


def test_interface_and_implementer_in_one_file():
    src = """
    interface Shape { double area(); }
    class Circle implements Shape {
        double r;
        Circle(double r) { this.r = r; }
        double area() { return 3.14 * r * r; }
    }
    """
    shape, circle = parse_source(src)
    assert shape.kind == "interface"
    assert shape.methods == (("area", "double", ()),)
    assert circle.interfaces == ("Shape",)
    assert circle.constructors == (("double",),)


def test_generics_arrays_annotations_stripped():
    src = """
    package p;
    import java.util.List;
    @Deprecated
    public class Box<T> extends Base<T> implements Cmp<Box<T>> {
        List<String>[] slots;
        int[][] grid;
        @Override
        public List<T> all(Map<String, T> m, int... ns) { return null; }
    }
    """
    (box,) = parse_source(src)
    assert box.superclass == "Base"
    assert box.interfaces == ("Cmp",)
    assert box.fields == (("slots", "List"), ("grid", "int"))
    assert box.methods == (("all", "List", ("Map", "int")),)


def test_multi_declarator_fields_and_initializers():
    src = """
    class K {
        int a, b = f(1, 2), c;
        double[] xs = {1.0, 2.0};
        static { int unused = 0; }
    }
    """
    (k,) = parse_source(src)
    assert k.fields == (("a", "int"), ("b", "int"), ("c", "int"), ("xs", "double"))


def test_nested_types_skipped():
    src = """
    class Outer {
        int x;
        static class Inner { Inner() {} double y; }
        interface Helper { void go(); }
        void run() {}
    }
    """
    (outer,) = parse_source(src)
    assert outer.fields == (("x", "int"),)
    assert outer.methods == (("run", "void", ()),)
    assert outer.constructors == ()


def test_malformed_source_raises():
    with pytest.raises(MalformedSource):
        parse_source("class Broken {", "Broken.java")


def test_scan_tree_fixture(corpus10):
    assert len(corpus10.classes) == 10
    assert "com.example.geom.Point" in corpus10.classes
    # String and Math never resolve to corpus members
    assert any("String" in d for d in corpus10.diagnostics)


def test_scan_determinism(tmp_path):
    a = scan_tree(FIXTURES / "corpus10")
    b = scan_tree(FIXTURES / "corpus10", max_workers=1)
    assert a == b
    save_summaries(a, tmp_path / "a.json")
    save_summaries(b, tmp_path / "b.json")
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


def test_resolution_range_in_corpus(corpus10):
    for target in corpus10.resolution.values():
        assert target in corpus10.classes


def test_wildcard_and_explicit_imports(corpus10):
    sprite = "com.example.draw.Sprite"
    assert corpus10.resolve(sprite, "Point") == "com.example.geom.Point"
    assert corpus10.resolve(sprite, "Vector") == "com.example.geom.Vector"
    label = "com.example.draw.Label"
    assert corpus10.resolve(label, "Point") == "com.example.geom.Point"
    assert corpus10.resolve(label, "String") is None


def test_empty_directory_raises():
    with pytest.raises(EmptyCorpus):
        scan_tree(FIXTURES / "empty_dir")


def test_duplicate_class_raises(tmp_path):
    (tmp_path / "A1.java").write_text("package p; class A {}")
    (tmp_path / "A2.java").write_text("package p; class A {}")
    with pytest.raises(DuplicateClass):
        scan_tree(tmp_path)


def test_unparseable_file_skipped_not_fatal(tmp_path):
    (tmp_path / "Good.java").write_text("class Good {}")
    (tmp_path / "Bad.java").write_text("class Bad {{{")
    corpus = scan_tree(tmp_path)
    assert list(corpus.classes) == ["Good"]
    assert any("Bad.java" in d for d in corpus.diagnostics)


def test_round_trip_identity(corpus10, tmp_path):
    path = tmp_path / "corpus.json"
    save_summaries(corpus10, path)
    assert load_summaries(path) == corpus10


def test_unknown_field_rejected(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(
        '{"version": "couplaw-summary/1", "classes": [{"qualified_name": "A",'
        ' "kind": "class", "superclass": null, "interfaces": [], "fields": [],'
        ' "constructors": [], "methods": [], "surprise": 1}], "resolution": []}'
    )
    with pytest.raises(FormatError):
        load_summaries(path)


def test_bad_version_rejected(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"version": "couplaw-summary/2", "classes": []}')
    with pytest.raises(FormatError):
        load_summaries(path)


def test_large_round_trip_under_five_seconds(tmp_path):
    corpus = generate(SynthParams(
        n_classes=6000, edges_per_class={"aggregation": 2, "parameter": 1},
        rng_seed=5))
    path = tmp_path / "big.json"
    start = time.perf_counter()
    save_summaries(corpus, path)
    loaded = load_summaries(path)
    elapsed = time.perf_counter() - start
    assert loaded == corpus
    assert elapsed < 5.0


def test_member_counts_match_hand_count(corpus10):
    canvas = corpus10.classes["com.example.draw.Canvas"]
    assert len(canvas.fields) == 3
    assert len(canvas.methods) == 2
    assert len(canvas.constructors) == 1
    shape = corpus10.classes["com.example.draw.Shape"]
    assert shape.kind == "interface"
    assert shape.constructors == () and shape.superclass is None


def test_order_independent_merge():
    unit_a = parse_compilation_unit("package p; class A { B b; }", "A.java")
    unit_b = parse_compilation_unit("package p; class B {}", "B.java")
    assert Corpus.from_units([unit_a, unit_b]) == Corpus.from_units([unit_b, unit_a])
