import pytest

from treepeak.profile import profile_from_letters


def letters(word):
    return tuple(ord(ch) - ord("a") for ch in word)


@pytest.fixture
def p1():
    return profile_from_letters("abcde", "edcba")


@pytest.fixture
def p2():
    return profile_from_letters("abcde", "ebcda")


@pytest.fixture
def p3():
    return profile_from_letters("kfedghcijba", "dcbeafghijk", "gfhiedcbajk")
