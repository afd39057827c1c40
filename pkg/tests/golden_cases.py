"""Golden CLI transcripts.

Each case is a CLI invocation, optionally fed ``golden/<name>.input.json``;
its stdout is stored in ``golden/<name>.out``.  Inputs use small dyadic
numbers so every output is exact and byte-stable across platforms.

Regenerate after an intentional output change with::

    python tests/golden_cases.py
"""
import contextlib
import io
import pathlib
import sys

from coadjoint import cli

GOLDEN = pathlib.Path(__file__).parent / "golden"

CASES = {
    "classify_time_reversing": ["classify"],
    "classify_time_reversing_text": ["classify", "--text"],
    "classify_twin_antimatter": ["classify"],
    "coadjoint_poincare": ["coadjoint", "--group", "poincare"],
    "coadjoint_eight": ["coadjoint", "--group", "eight"],
    "coadjoint_twin": ["coadjoint", "--group", "twin"],
    "coadjoint_twin_text": ["coadjoint", "--group", "twin", "--text"],
    "adjoint_poincare": ["adjoint", "--group", "poincare"],
    "reduce_rest": ["reduce"],
    "symmetry_table": ["symmetry-table"],
    "symmetry_table_text": ["symmetry-table", "--text"],
}

# several transcripts share one input
INPUTS = {
    "classify_time_reversing_text": "classify_time_reversing",
    "coadjoint_twin_text": "coadjoint_twin",
}


def input_path(name: str) -> pathlib.Path | None:
    path = GOLDEN / f"{INPUTS.get(name, name)}.input.json"
    return path if path.exists() else None


def argv_for(name: str) -> list[str]:
    path = input_path(name)
    return CASES[name] + (["--in", str(path)] if path else [])


def run(argv: list[str]) -> tuple[int, str]:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli.main(argv)
    return code, buf.getvalue()


def regenerate() -> None:
    for name in CASES:
        code, out = run(argv_for(name))
        if code != 0:
            sys.exit(f"{name}: exit code {code}")
        (GOLDEN / f"{name}.out").write_text(out, encoding="utf-8")
        print(f"wrote {name}.out")


if __name__ == "__main__":
    regenerate()
