"""Java-subset ingestion: declaration-level parsing into class summaries.

Only the information needed for coupling analysis is extracted: type
declarations, extends/implements clauses, field types, and method and
constructor signatures. Method bodies are skipped by brace balancing.
Generics and annotations are consumed and discarded; array suffixes are
stripped so only raw element types remain.
"""

from __future__ import annotations

import json
import os
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .errors import DuplicateClass, EmptyCorpus, FormatError, MalformedSource

INTERCHANGE_VERSION = "couplaw-summary/1"

PRIMITIVES = frozenset(
    {"int", "boolean", "char", "byte", "short", "long", "float", "double", "void"}
)

_MODIFIERS = frozenset(
    {
        "public",
        "protected",
        "private",
        "static",
        "final",
        "abstract",
        "native",
        "synchronized",
        "transient",
        "volatile",
        "strictfp",
        "default",
    }
)


@dataclass(frozen=True)
class ClassSummary:
    """Declaration-level digest of one top-level class or interface."""

    qualified_name: str
    kind: str  # "class" or "interface"
    superclass: str | None
    interfaces: tuple[str, ...]
    fields: tuple[tuple[str, str], ...]  # (field_name, declared_type)
    constructors: tuple[tuple[str, ...], ...]  # each entry: param types
    methods: tuple[tuple[str, str, tuple[str, ...]], ...]  # (name, return, params)

    @property
    def simple_name(self) -> str:
        return self.qualified_name.rsplit(".", 1)[-1]

    def referenced_names(self) -> set[str]:
        """All raw type names this class refers to, primitives excluded."""
        names: set[str] = set()
        if self.superclass:
            names.add(self.superclass)
        names.update(self.interfaces)
        names.update(t for _, t in self.fields)
        for params in self.constructors:
            names.update(params)
        for _, ret, params in self.methods:
            names.add(ret)
            names.update(params)
        return {n for n in names if n not in PRIMITIVES}


@dataclass(frozen=True)
class CompilationUnit:
    """One parsed .java file: package, imports, and its top-level types."""

    package: str
    imports: tuple[str, ...]  # raw import targets, "a.b.C" or "a.b.*"
    summaries: tuple[ClassSummary, ...]


@dataclass
class Corpus:
    """An immutable set of class summaries plus a name-resolution table.

    ``resolution`` maps (referencing qualified class name, raw type name)
    to a qualified name that is guaranteed to exist in ``classes``.
    Unresolvable references are listed in ``diagnostics`` and excluded
    from the table. ``diagnostics`` does not participate in equality.
    """

    classes: dict[str, ClassSummary]
    resolution: dict[tuple[str, str], str]
    diagnostics: list[str] = field(default_factory=list, compare=False)

    def __post_init__(self):
        for target in self.resolution.values():
            if target not in self.classes:
                raise ValueError(f"resolution target not in corpus: {target}")

    def resolve(self, referrer: str, raw_name: str) -> str | None:
        return self.resolution.get((referrer, raw_name))

    @staticmethod
    def from_units(units: list[CompilationUnit]) -> "Corpus":
        classes: dict[str, ClassSummary] = {}
        for unit in units:
            for summary in unit.summaries:
                if summary.qualified_name in classes:
                    raise DuplicateClass(summary.qualified_name)
                classes[summary.qualified_name] = summary
        classes = dict(sorted(classes.items()))
        resolution, diagnostics = _build_resolution(classes, units)
        return Corpus(classes, resolution, diagnostics)

    @staticmethod
    def from_summaries(summaries: list[ClassSummary]) -> "Corpus":
        """Build a corpus whose references are already qualified names."""
        unit = CompilationUnit("", (), tuple(summaries))
        return Corpus.from_units([unit])


def _build_resolution(classes, units):
    """Resolve raw names per class: explicit imports, then same package,
    then wildcard imports, then already-qualified names."""
    resolution: dict[tuple[str, str], str] = {}
    diagnostics: list[str] = []
    for unit in units:
        explicit = {}
        wildcards = []
        for imp in unit.imports:
            if imp.endswith(".*"):
                wildcards.append(imp[:-2])
            else:
                explicit[imp.rsplit(".", 1)[-1]] = imp
        for summary in unit.summaries:
            referrer = summary.qualified_name
            for raw in sorted(summary.referenced_names()):
                target = None
                if raw in explicit and explicit[raw] in classes:
                    target = explicit[raw]
                elif _in_package(unit.package, raw) in classes:
                    target = _in_package(unit.package, raw)
                else:
                    for pkg in wildcards:
                        if f"{pkg}.{raw}" in classes:
                            target = f"{pkg}.{raw}"
                            break
                    if target is None and raw in classes:
                        target = raw
                if target is not None:
                    resolution[(referrer, raw)] = target
                else:
                    diagnostics.append(f"unresolved: {raw} (referenced by {referrer})")
    return resolution, sorted(set(diagnostics))


def _in_package(package: str, simple: str) -> str:
    return f"{package}.{simple}" if package else simple


# --- tokenizer -------------------------------------------------------------

_COMMENT_RE = re.compile(r"//[^\n]*|/\*.*?\*/", re.S)
_STRING_RE = re.compile(r'"(?:\\.|[^"\\\n])*"|\'(?:\\.|[^\'\\\n])*\'')
_TOKEN_RE = re.compile(
    r"[A-Za-z_$][A-Za-z0-9_$]*(?:\.[A-Za-z_$][A-Za-z0-9_$]*)*"  # dotted name
    r"|\.\.\."
    r"|\d[\w.]*"
    r"|\S"
)


def _blank_keep_newlines(match):
    return re.sub(r"[^\n]", " ", match.group(0))


def _tokenize(text: str) -> list[tuple[str, int]]:
    text = _COMMENT_RE.sub(_blank_keep_newlines, text)
    text = _STRING_RE.sub('""', text)
    tokens = []
    line = 1
    pos = 0
    for m in _TOKEN_RE.finditer(text):
        line += text.count("\n", pos, m.start())
        pos = m.start()
        tokens.append((m.group(0), line))
    return tokens


class _Parser:
    """Recursive-descent parser over the token stream of one file."""

    def __init__(self, tokens: list[tuple[str, int]], file_name: str):
        self.tokens = tokens
        self.file = file_name
        self.i = 0

    def _fail(self, message: str):
        line = self.tokens[self.i][1] if self.i < len(self.tokens) else 0
        raise MalformedSource(self.file, line, message)

    def _peek(self, offset=0) -> str | None:
        j = self.i + offset
        return self.tokens[j][0] if j < len(self.tokens) else None

    def _next(self) -> str:
        if self.i >= len(self.tokens):
            self._fail("unexpected end of file")
        tok = self.tokens[self.i][0]
        self.i += 1
        return tok

    def _expect(self, tok: str):
        got = self._next()
        if got != tok:
            self.i -= 1
            self._fail(f"expected {tok!r}, found {got!r}")

    def _skip_balanced(self, open_tok: str, close_tok: str):
        self._expect(open_tok)
        depth = 1
        while depth > 0:
            tok = self._next()
            if tok == open_tok:
                depth += 1
            elif tok == close_tok:
                depth -= 1

    def _skip_annotation(self):
        self._expect("@")
        self._next()  # annotation name
        if self._peek() == "(":
            self._skip_balanced("(", ")")

    def _skip_generics(self):
        if self._peek() == "<":
            depth = 0
            while True:
                tok = self._next()
                if tok == "<":
                    depth += 1
                elif tok == ">":
                    depth -= 1
                    if depth == 0:
                        return

    def _read_type(self) -> str:
        """Read a type reference, stripping generic arguments and arrays."""
        name = self._next()
        if not re.match(r"[A-Za-z_$]", name):
            self.i -= 1
            self._fail(f"expected a type name, found {name!r}")
        self._skip_generics()
        while self._peek() == "[" and self._peek(1) == "]":
            self._next()
            self._next()
        return name

    # --- compilation unit ---

    def parse_unit(self) -> CompilationUnit:
        package = ""
        imports: list[str] = []
        summaries: list[ClassSummary] = []
        while self.i < len(self.tokens):
            tok = self._peek()
            if tok == "package":
                self._next()
                package = self._next()
                self._expect(";")
            elif tok == "import":
                self._next()
                if self._peek() == "static":
                    self._next()
                name = self._next()
                if self._peek() == ".":  # wildcard: "a.b" "." "*"
                    self._next()
                    self._expect("*")
                    name += ".*"
                self._expect(";")
                imports.append(name)
            elif tok == "@":
                self._skip_annotation()
            elif tok in _MODIFIERS:
                self._next()
            elif tok in ("class", "interface"):
                summaries.append(self._parse_type_decl(package))
            elif tok in ("enum", "record"):
                self._skip_type_like_decl()
            elif tok == ";":
                self._next()
            else:
                self._fail(f"unexpected token {tok!r} at top level")
        return CompilationUnit(package, tuple(imports), tuple(summaries))

    def _skip_type_like_decl(self):
        # enum/record or nested type we do not summarize: skip to its body
        # and over the balanced braces.
        while self._peek() not in ("{", None):
            tok = self._next()
            if tok == "(":  # record header
                self.i -= 1
                self._skip_balanced("(", ")")
            elif tok == "<":
                self.i -= 1
                self._skip_generics()
        if self._peek() is None:
            self._fail("declaration without a body")
        self._skip_balanced("{", "}")

    def _parse_type_decl(self, package: str) -> ClassSummary:
        kind = self._next()  # "class" or "interface"
        simple_name = self._next()
        self._skip_generics()
        superclass = None
        interfaces: list[str] = []
        if self._peek() == "extends":
            self._next()
            if kind == "class":
                superclass = self._read_type()
            else:
                interfaces.append(self._read_type())
                while self._peek() == ",":
                    self._next()
                    interfaces.append(self._read_type())
        if self._peek() == "implements":
            self._next()
            interfaces.append(self._read_type())
            while self._peek() == ",":
                self._next()
                interfaces.append(self._read_type())
        self._expect("{")
        fields, constructors, methods = self._parse_body(simple_name, kind)
        return ClassSummary(
            qualified_name=_in_package(package, simple_name),
            kind=kind,
            superclass=superclass,
            interfaces=tuple(sorted(set(interfaces))),
            fields=tuple(fields),
            constructors=tuple(constructors),
            methods=tuple(methods),
        )

    def _parse_body(self, class_name: str, kind: str):
        fields: list[tuple[str, str]] = []
        constructors: list[tuple[str, ...]] = []
        methods: list[tuple[str, str, tuple[str, ...]]] = []
        while True:
            tok = self._peek()
            if tok is None:
                self._fail(f"unterminated body of {class_name}")
            if tok == "}":
                self._next()
                return fields, constructors, methods
            if tok == ";":
                self._next()
            elif tok == "@":
                self._skip_annotation()
            elif tok == "{":  # instance initializer block
                self._skip_balanced("{", "}")
            elif tok == "static" and self._peek(1) == "{":
                self._next()
                self._skip_balanced("{", "}")
            elif tok in ("class", "interface", "enum", "record"):
                self._skip_type_like_decl()
            elif tok in _MODIFIERS:
                self._next()
            elif tok == "<":  # generic method type parameters
                self._skip_generics()
            else:
                self._parse_member(class_name, kind, fields, constructors, methods)

    def _parse_member(self, class_name, kind, fields, constructors, methods):
        # Constructor: name token immediately followed by "(".
        if self._peek() == class_name and self._peek(1) == "(":
            self._next()
            params = self._parse_params()
            self._finish_callable()
            constructors.append(params)
            return
        declared_type = self._read_type()
        name = self._next()
        if self._peek() == "(":
            params = self._parse_params()
            self._finish_callable()
            methods.append((name, declared_type, params))
            return
        # Field declarator list: name [=] expr? (, name [= expr])* ;
        while True:
            while self._peek() == "[" and self._peek(1) == "]":
                self._next()
                self._next()
            fields.append((name, declared_type))
            tok = self._next()
            if tok == "=":
                tok = self._skip_initializer()
            if tok == ";":
                return
            if tok != ",":
                self.i -= 1
                self._fail(f"unexpected token {tok!r} in field declaration")
            name = self._next()

    def _skip_initializer(self) -> str:
        """Skip an initializer expression; return the ',' or ';' that ends it."""
        depth = 0
        while True:
            tok = self._next()
            if tok in "([{":
                depth += 1
            elif tok in ")]}":
                depth -= 1
            elif depth == 0 and tok in (",", ";"):
                return tok

    def _parse_params(self) -> tuple[str, ...]:
        self._expect("(")
        params: list[str] = []
        if self._peek() == ")":
            self._next()
            return tuple(params)
        while True:
            while self._peek() == "@":
                self._skip_annotation()
            if self._peek() == "final":
                self._next()
            ptype = self._read_type()
            if self._peek() == "...":
                self._next()
            self._next()  # parameter name
            while self._peek() == "[" and self._peek(1) == "]":
                self._next()
                self._next()
            params.append(ptype)
            tok = self._next()
            if tok == ")":
                return tuple(params)
            if tok != ",":
                self.i -= 1
                self._fail(f"unexpected token {tok!r} in parameter list")

    def _finish_callable(self):
        # After the parameter list: optional throws clause, then ";" or body.
        if self._peek() == "throws":
            self._next()
            self._read_type()
            while self._peek() == ",":
                self._next()
                self._read_type()
        tok = self._peek()
        if tok == ";":
            self._next()
        elif tok == "{":
            self._skip_balanced("{", "}")
        else:
            self._fail(f"expected method body or ';', found {tok!r}")


def parse_compilation_unit(source_text: str, file_name: str) -> CompilationUnit:
    return _Parser(_tokenize(source_text), file_name).parse_unit()


def parse_source(source_text: str, file_name: str = "<string>") -> list[ClassSummary]:
    """Parse one file's text into summaries of its top-level types."""
    return list(parse_compilation_unit(source_text, file_name).summaries)


def scan_tree(root_path: str | Path, max_workers: int | None = None) -> Corpus:
    """Parse every .java file under root_path into a corpus.

    Files are discovered in sorted order and the merge is deterministic
    regardless of parse scheduling. Unparseable files are skipped and
    reported through corpus diagnostics. Worker count defaults to the
    COUPLAW_THREADS environment variable.
    """
    root = Path(root_path)
    if not root.exists():
        raise FileNotFoundError(root)
    files = sorted(p for p in root.rglob("*.java") if p.is_file())
    if max_workers is None:
        max_workers = int(os.environ.get("COUPLAW_THREADS", "0")) or None

    def parse_one(path: Path):
        try:
            return parse_compilation_unit(path.read_text(encoding="utf-8"), str(path))
        except MalformedSource as exc:
            return exc

    if max_workers == 1:
        results = [parse_one(p) for p in files]
    else:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            results = list(pool.map(parse_one, files))

    units = []
    parse_errors = []
    for result in results:
        if isinstance(result, MalformedSource):
            parse_errors.append(f"skipped: {result}")
        else:
            units.append(result)
    corpus = Corpus.from_units(units)
    corpus.diagnostics.extend(parse_errors)
    if not corpus.classes:
        raise EmptyCorpus(f"no classes parsed under {root}")
    return corpus


# --- interchange format ----------------------------------------------------


def _summary_to_record(s: ClassSummary) -> dict:
    record = {
        "qualified_name": s.qualified_name,
        "kind": s.kind,
        "superclass": s.superclass,
        "interfaces": list(s.interfaces),
        "fields": [[n, t] for n, t in s.fields],
        "constructors": [list(p) for p in s.constructors],
        "methods": [[n, r, list(p)] for n, r, p in s.methods],
    }
    return record


_RECORD_FIELDS = (
    "qualified_name",
    "kind",
    "superclass",
    "interfaces",
    "fields",
    "constructors",
    "methods",
)


def _record_to_summary(record: dict, index: int) -> ClassSummary:
    context = f"classes[{index}]"
    if not isinstance(record, dict):
        raise FormatError("class record is not an object", context)
    unknown = set(record) - set(_RECORD_FIELDS)
    if unknown:
        raise FormatError(f"unknown field(s): {sorted(unknown)}", context)
    missing = set(_RECORD_FIELDS) - set(record)
    if missing:
        raise FormatError(f"missing field(s): {sorted(missing)}", context)
    try:
        summary = ClassSummary(
            qualified_name=record["qualified_name"],
            kind=record["kind"],
            superclass=record["superclass"],
            interfaces=tuple(record["interfaces"]),
            fields=tuple((n, t) for n, t in record["fields"]),
            constructors=tuple(tuple(p) for p in record["constructors"]),
            methods=tuple((n, r, tuple(p)) for n, r, p in record["methods"]),
        )
    except (TypeError, ValueError) as exc:
        raise FormatError(f"malformed record: {exc}", context) from exc
    if summary.kind not in ("class", "interface"):
        raise FormatError(f"unknown kind {summary.kind!r}", context)
    if summary.kind == "interface" and (summary.constructors or summary.superclass):
        raise FormatError("interface with constructors or superclass", context)
    return summary


def save_summaries(corpus: Corpus, path: str | Path) -> None:
    """Write a corpus to the couplaw-summary/1 interchange format."""
    document = {
        "version": INTERCHANGE_VERSION,
        "classes": [_summary_to_record(s) for _, s in sorted(corpus.classes.items())],
        "resolution": [
            [referrer, raw, target]
            for (referrer, raw), target in sorted(corpus.resolution.items())
        ],
    }
    text = json.dumps(document, indent=1, ensure_ascii=True) + "\n"
    Path(path).write_text(text, encoding="utf-8")


def load_summaries(path: str | Path) -> Corpus:
    """Load a corpus from the couplaw-summary/1 interchange format."""
    try:
        document = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}", str(path)) from exc
    if not isinstance(document, dict):
        raise FormatError("top level is not an object", str(path))
    unknown = set(document) - {"version", "classes", "resolution"}
    if unknown:
        raise FormatError(f"unknown top-level field(s): {sorted(unknown)}", str(path))
    if document.get("version") != INTERCHANGE_VERSION:
        raise FormatError(
            f"unsupported version {document.get('version')!r}", str(path)
        )
    summaries = [
        _record_to_summary(rec, i) for i, rec in enumerate(document.get("classes", []))
    ]
    classes = {}
    for summary in summaries:
        if summary.qualified_name in classes:
            raise DuplicateClass(summary.qualified_name)
        classes[summary.qualified_name] = summary
    classes = dict(sorted(classes.items()))
    resolution = {}
    for i, entry in enumerate(document.get("resolution", [])):
        try:
            referrer, raw, target = entry
        except (TypeError, ValueError) as exc:
            raise FormatError("resolution entry is not a triple", f"resolution[{i}]") from exc
        if target not in classes:
            raise FormatError(
                f"resolution target {target!r} not in classes", f"resolution[{i}]"
            )
        resolution[(referrer, raw)] = target
    return Corpus(classes, resolution)
