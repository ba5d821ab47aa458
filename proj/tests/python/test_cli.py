"""CLI contract tests; the binary path arrives in PALCLOSURE_CLI."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("PALCLOSURE_CLI", "palclosure")


def run(*args, expect_code=0):
    result = subprocess.run(
        [CLI, *args], capture_output=True, text=True, timeout=120
    )
    assert result.returncode == expect_code, result.stderr
    return result


def test_pal_word():
    assert run("pal", "abc").stdout == "abacaba\n"
    assert run("pal", "").stdout == "\n"


def test_pal_group():
    assert run("pal", "--group", "aB").stdout == "B\n"
    assert run("pal", "--group", "aA").stdout == "1\n"


def test_closure():
    assert run("closure", "abaa").stdout == "abaaba\n"


def test_parse_errors():
    result = run("pal", "a?b", expect_code=2)
    assert "unknown symbol" in result.stderr
    result = run("pal", "--alphabet", "ab", "abc", expect_code=2)
    assert "not in the declared alphabet" in result.stderr


def test_guard():
    result = run("pal", "--max-pal-length", "100", "abababababababab", expect_code=2)
    assert "guard" in result.stderr


def test_automaton_compact_json():
    result = run("automaton", "abc", "--kind", "compact", "--format", "json")
    payload = json.loads(result.stdout)
    assert payload["states"] == [0, 1, 2, 3]
    assert len(payload["edges"]) == 6
    labels = sorted(edge["label"] for edge in payload["edges"])
    assert labels == ["a", "ba", "ba", "caba", "caba", "caba"]


def test_automaton_suffix_dot():
    result = run("automaton", "abc", "--kind", "suffix", "--format", "dot")
    assert result.stdout.startswith("digraph {")
    # 8 states: one doublecircle marker per terminal, 4 of them.
    assert result.stdout.count("doublecircle") == 4


def test_automaton_counting():
    result = run("automaton", "", "--kind", "counting")
    assert result.stdout == "states 1\ninitial 0\nterminals\n"


def test_automaton_text_default():
    result = run("automaton", "ab", "--kind", "compact")
    assert result.stdout == (
        "states 3\n"
        "initial 0\n"
        "terminals 0 1 2\n"
        "edge 0 a 1\n"
        "edge 0 ba 2\n"
        "edge 1 ba 2\n"
    )


def test_verify_suffix_theorem():
    result = run("verify", "--scope", "suffix-theorem", "--max-len", "5",
                 "--alphabet", "3")
    assert "suffix theorem: ok (364 checked)" in result.stdout
    assert result.stdout.endswith("PASS\n")


def test_verify_justin():
    result = run("verify", "--scope", "justin", "--max-len", "4", "--alphabet", "2")
    assert result.stdout.endswith("PASS\n")


def test_verify_counts_trivial():
    result = run("verify", "--scope", "counts", "--max-len", "1", "--alphabet", "1")
    assert result.stdout.endswith("PASS\n")


def test_verify_bound_violation():
    run("verify", "--scope", "compact", "--max-len", "16", "--alphabet", "4",
        expect_code=2)


def test_output_is_deterministic():
    first = run("verify", "--scope", "counts", "--max-len", "3", "--alphabet", "2")
    second = run("verify", "--scope", "counts", "--max-len", "3", "--alphabet", "2")
    assert first.stdout == second.stdout

    a = run("automaton", "abca", "--kind", "compact", "--format", "json").stdout
    b = run("automaton", "abca", "--kind", "compact", "--format", "json").stdout
    assert a == b
