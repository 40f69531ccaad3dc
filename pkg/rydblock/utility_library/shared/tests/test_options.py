"""Tests for command-line option parsing."""

import pytest
import typer

from rydblock.utility_library.shared.config import C6_N70, C6_N82
from rydblock.utility_library.shared.options import (
    c6_for_level,
    parse_edge_list,
    parse_float_list,
    parse_instance_list,
    parse_name_list,
)


def test_float_list():
    assert parse_float_list("1, 3.5", "omega") == (1.0, 3.5)


@pytest.mark.parametrize("text", ["", "1,x"])
def test_float_list_rejects(text):
    with pytest.raises(typer.BadParameter):
        parse_float_list(text, "omega")


def test_name_list_normalizes_case():
    assert parse_name_list("Global,LOCAL", "scenario", ("global", "local")) == ("global", "local")


def test_name_list_unknown():
    with pytest.raises(typer.BadParameter, match="adiabatic"):
        parse_name_list("global,adiabatic", "protocol", ("global", "local"))


def test_edge_list():
    assert parse_edge_list("0-1, 1-2") == ((0, 1), (1, 2))


@pytest.mark.parametrize("text", ["0-1,2", "a-b"])
def test_edge_list_rejects(text):
    with pytest.raises(typer.BadParameter):
        parse_edge_list(text)


def test_instance_list_keeps_paths():
    assert parse_instance_list("k23,Runs/G4.json") == ("k23", "Runs/G4.json")


def test_c6_presets():
    assert c6_for_level(70) == C6_N70
    assert c6_for_level(82) == C6_N82
    with pytest.raises(typer.BadParameter):
        c6_for_level(60)
