import pytest

from hopf_forge.catalog import (
    DEFAULT_INSTANCES, ENTRIES, CatalogError, UnknownEntry, lookup, parse_entry_name, parse_group,
    q_binomial, q_integer,
)
from hopf_forge.cli import check_item
from hopf_forge.scalars import cyclotomic, primitive_root, rational_functions

FAST = [n for n in DEFAULT_INSTANCES
        if not n.startswith(("small-quantum-sl2", "classical-double:of=taft", "group-double:G=S3"))]


@pytest.mark.parametrize("name", FAST)
def test_default_instances_check(name):
    item = lookup(name)
    assert check_item(item).ok


def test_every_entry_has_a_default_instance():
    used = {parse_entry_name(n)[0] for n in DEFAULT_INSTANCES}
    assert used == set(ENTRIES)


def test_entry_name_grammar():
    assert parse_entry_name("taft:n=3") == ("taft", {"n": "3"})
    assert parse_entry_name("bicharacter:orders=2x2,matrix=0.1/0.0") == \
        ("bicharacter", {"orders": "2x2", "matrix": "0.1/0.0"})
    assert parse_entry_name("sweedler") == ("sweedler", {})
    with pytest.raises(CatalogError):
        parse_entry_name("taft:n")


def test_groups_by_name():
    assert parse_group("Z4").order == 4
    assert parse_group("S3").order == 6
    assert parse_group("V4").is_abelian()
    assert parse_group("Z2xZ3").order == 6
    with pytest.raises(CatalogError):
        parse_group("Q8")


def test_bad_names_and_parameters():
    with pytest.raises(UnknownEntry):
        lookup("quaternions")
    with pytest.raises(CatalogError):
        lookup("taft:n=one")
    with pytest.raises(CatalogError):
        lookup("taft:n=1")
    with pytest.raises(CatalogError):
        lookup("bicharacter:orders=2x2,matrix=0.1")


def test_field_override():
    F = rational_functions(cyclotomic(3))
    item = lookup("taft:n=3", field=F)
    assert item.obj.field == F
    assert check_item(item).ok
    # the generator of Q(z6) is not a cube root of unity
    with pytest.raises(CatalogError):
        lookup("taft:n=3", field=cyclotomic(6))


def test_q_numbers():
    F = cyclotomic(3)
    z = primitive_root(F)
    assert q_integer(3, z) == F.zero()
    assert q_binomial(2, 1, z) == 1 + z
    assert q_binomial(3, 1, z) == F.zero()


def test_kinds_are_reported():
    kinds = {lookup(n).kind for n in FAST}
    assert {"hopf", "braided-hopf", "quasitriangular", "dual-quasitriangular", "pairing", "double",
            "yd-module", "cocycle", "cycle"} <= kinds
