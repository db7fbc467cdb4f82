"""Rewrite tests/golden/*.txt from the current CLI.

Only run this after a deliberate output change; the golden test exists to
catch accidental ones.
"""
import sys
from pathlib import Path

TESTS = Path(__file__).resolve().parents[1] / "tests"
sys.path.insert(0, str(TESTS))

from test_cli import CASES, GOLDEN, transcript  # noqa: E402


def main():
    GOLDEN.mkdir(exist_ok=True)
    for name, argv in sorted(CASES.items()):
        (GOLDEN / f"{name}.txt").write_text(transcript(argv), encoding="utf-8")
        print(f"wrote {name}.txt")


if __name__ == "__main__":
    main()
