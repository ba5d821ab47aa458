"""Smoke tests for the compiled module through the palclosure package."""

import json

import pytest

import palclosure as pc


def test_word_operations():
    assert pc.reverse_word("abc") == "cba"
    assert pc.is_palindrome("abaaba")
    assert not pc.is_palindrome("ab")
    assert pc.longest_palindromic_suffix("abaa") == "aa"
    assert pc.palindromic_closure("abaa") == "abaaba"
    assert pc.pal_word("abc") == "abacaba"
    assert pc.pal_word("") == ""
    assert pc.pal_prefix_lengths("abc") == [0, 1, 3, 7]


def test_left_special_factors():
    assert pc.left_special_factors("abacaba") == {"", "a"}


def test_group_elements():
    u = pc.GroupElement("aB")
    assert str(u) == "aB"
    assert str(u.inverse()) == "bA"
    assert str(u * pc.GroupElement("b")) == "a"
    assert u.degree("a") == 1 and u.degree("b") == -1
    assert u.algebraic_length() == 0
    assert str(pc.GroupElement("1")) == "1"


def test_pal_group():
    assert str(pc.pal_group(pc.GroupElement("aB"))) == "B"
    assert str(pc.pal_group(pc.GroupElement.from_word("abc"))) == "abacaba"
    assert pc.pal_group(pc.GroupElement("abA")).is_palindrome()
    assert pc.check_justin_R(pc.GroupElement("ab"), pc.GroupElement("a"))
    assert pc.check_justin_L(pc.GroupElement("a"), pc.GroupElement("b"))


def test_automorphisms():
    a, b = pc.GroupElement("a"), pc.GroupElement("b")
    assert str(pc.apply_L(a, b)) == "ab"
    assert str(pc.apply_R(a, b)) == "ba"
    assert str(pc.apply_R(a, pc.GroupElement("aB"))) == "B"


def test_transducer():
    assert pc.transducer_emissions("aba") == ["a", "ba", "aba"]
    assert "".join(pc.transducer_emissions("abc")) == "abacaba"


def test_cocycle_witness():
    assert str(pc.cocycle_witness_search("ab", 2)) == "ab"
    assert pc.cocycle_witness_search("abc", 4) is None


def test_suffix_automaton():
    aut = pc.suffix_automaton(pc.pal_word("abc"))
    assert aut.state_count == 8
    assert aut.run("abacaba") in aut.terminals
    assert aut.run("zz") is None
    passed, detail = pc.verify_pal_suffix_theorem("abc")
    assert passed, detail


def test_minimal_dfa():
    aut = pc.minimal_dfa(["aaa", "aba"])
    assert aut.state_count == 4
    assert pc.enumerate_dfa_language(aut) == {"aaa", "aba"}


def test_compact_automaton():
    built = pc.build_direct("abc")
    assert built.pal == "abacaba"
    assert built.automaton.state_count == 4
    assert built.automaton.edge_count == 6
    assert (0, "caba", 3) in built.automaton.edges

    suffixes = [built.pal[i:] for i in range(len(built.pal) + 1)]
    assert pc.equivalent(built.automaton, pc.minimal_compact(suffixes))
    assert pc.enumerate_language(built.automaton) == set(suffixes)

    reduced = pc.reduce_to_minimal(pc.from_dfa(pc.suffix_automaton(built.pal)))
    assert pc.equivalent(reduced, built.automaton)


def test_extend_and_restrict():
    base = pc.build_direct("abc")
    extended = pc.extend(base, "a")
    assert extended.directive == "abca"
    assert pc.equivalent(extended.automaton, pc.build_direct("abca").automaton)
    back = pc.restrict_to_prefix(extended, "abc")
    assert pc.equivalent(back.automaton, base.automaton)


def test_counts():
    assert pc.transition_count("abc") == 6
    assert pc.path_count_to_final("abc") == 4
    assert all(pc.fibonacci_length_check(n) for n in range(1, 13))


def test_counting_graph():
    graph = pc.counting_graph("abc")
    assert graph.vertex_count == 4
    assert (0, 4, 3) in graph.edges
    assert pc.has_unique_path_weights(graph, 7)


def test_json_round_trip():
    payload = json.loads(pc.build_direct("abc").automaton.to_json())
    assert payload["states"] == [0, 1, 2, 3]
    assert payload["initial"] == 0
    assert len(payload["edges"]) == 6
    assert payload["edges"][0] == {"from": 0, "label": "a", "to": 1}

    dot = pc.counting_graph("ab").to_dot()
    assert dot.startswith("digraph {")


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        pc.GroupElement("a?")
    with pytest.raises(ValueError):
        pc.minimal_compact([])
    with pytest.raises(IndexError):
        pc.fibonacci_length_check(0)
