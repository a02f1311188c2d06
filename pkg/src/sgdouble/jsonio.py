"""JSON encoding and decoding of the library's value types.

All schemas are snake_case, integer-only, order-independent:

semigroup  {"small": [ints], "conductor": int}
ideal      {"ambient": semigroup, "elements": [ints], "conductor": int}
spec       {"s": semigroup, "e": ideal, "b": int}
report     all ClassificationReport fields
family     {"base": semigroup, "exhaustive": bool,
            "members": [{"t": semigroup, "spec": spec, "class": str, "type": int}]}
"""

from __future__ import annotations

from .doubles import DoubleCertificate, DoubleFamily
from .duplication import DuplicationSpec
from .ideals import RelativeIdeal
from .semigroup import ClassificationReport, NumericalSemigroup, classify


def semigroup_to_dict(s: NumericalSemigroup) -> dict:
    return {"small": list(s.small_elements), "conductor": s.conductor}


def semigroup_from_dict(d: dict) -> NumericalSemigroup:
    return NumericalSemigroup.from_small_elements(d["small"], d["conductor"])


def ideal_to_dict(e: RelativeIdeal) -> dict:
    return {
        "ambient": semigroup_to_dict(e.ambient),
        "elements": list(e.elements_below),
        "conductor": e.ideal_conductor,
    }


def ideal_from_dict(d: dict) -> RelativeIdeal:
    from .ideals import relative_ideal

    return relative_ideal(semigroup_from_dict(d["ambient"]), d["elements"], d["conductor"])


def spec_to_dict(spec: DuplicationSpec) -> dict:
    return {
        "s": semigroup_to_dict(spec.base),
        "e": ideal_to_dict(spec.ideal),
        "b": spec.odd_offset,
    }


def spec_from_dict(d: dict) -> DuplicationSpec:
    return DuplicationSpec(semigroup_from_dict(d["s"]), ideal_from_dict(d["e"]), d["b"])


def report_to_dict(r: ClassificationReport) -> dict:
    return {
        "frobenius": r.frobenius,
        "gaps": list(r.gaps),
        "second_type_gaps": list(r.second_type_gaps),
        "pseudo_frobenius": list(r.pseudo_frobenius),
        "type": r.type,
        "symmetry_class": r.symmetry_class,
        "criteria_agreement": r.criteria_agreement,
    }


def report_from_dict(d: dict) -> ClassificationReport:
    return ClassificationReport(
        frobenius=d["frobenius"],
        gaps=tuple(d["gaps"]),
        second_type_gaps=tuple(d["second_type_gaps"]),
        pseudo_frobenius=tuple(d["pseudo_frobenius"]),
        type=d["type"],
        symmetry_class=d["symmetry_class"],
        criteria_agreement=d["criteria_agreement"],
    )


def family_to_dict(fam: DoubleFamily) -> dict:
    return {
        "base": semigroup_to_dict(fam.base),
        "exhaustive": fam.exhaustive,
        "members": [
            {
                "t": semigroup_to_dict(cert.double),
                "spec": spec_to_dict(cert.spec),
                "class": cert.kind,
                "type": cert.report.type,
            }
            for cert in fam.members
        ],
    }


def family_from_dict(d: dict) -> DoubleFamily:
    members = []
    for m in d["members"]:
        spec = spec_from_dict(m["spec"])
        t = semigroup_from_dict(m["t"])
        members.append(DoubleCertificate(t, spec, classify(t), m["class"]))
    return DoubleFamily(semigroup_from_dict(d["base"]), tuple(members), d["exhaustive"])
