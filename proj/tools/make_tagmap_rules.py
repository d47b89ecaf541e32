#!/usr/bin/env python3
# Copyright 2026 The Agatha Pipeline Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generates data/tagmap/ud_to_eagles.csv.

The rule rows are fixtures: UD category + feature bundles mapped onto
FreeLing-style Portuguese EAGLES tags. Per-category row counts follow
data/tagmap/manifest.csv.
"""

import itertools
import sys

COUNTS = {
    "NOUN": 20, "VERB": 101, "PROPN": 39, "PRON": 121, "ADJ": 70, "DET": 62,
    "AUX": 149, "ADP": 3, "NUM": 1, "PUNCT": 18, "CCONJ": 1, "SCONJ": 1,
    "INTJ": 1, "ADV": 2,
}

GENDER = {"Masc": "M", "Fem": "F"}
NUMBER = {"Sing": "S", "Plur": "P"}
PERSON = {"1": "1", "2": "2", "3": "3"}


def f(d, key, table, default="0"):
    return table.get(d.get(key), default) if key in d else default


def bundles(dims):
    """All optional combinations of the given dims, fewest features first."""
    keys = list(dims)
    out = []
    for r in range(len(keys) + 1):
        for combo in itertools.combinations(keys, r):
            for values in itertools.product(*(dims[k] for k in combo)):
                out.append(dict(zip(combo, values)))
    return out


def verb_tag(kind, d):
    form = d.get("VerbForm")
    mood = {"Ind": "I", "Sub": "S", "Imp": "M", "Cnd": "I"}.get(d.get("Mood"), "0")
    if form == "Inf":
        mood = "N"
    elif form == "Ger":
        mood = "G"
    elif form == "Part":
        mood = "P"
    tense = {"Pres": "P", "Past": "S", "Imp": "I", "Pqp": "M", "Fut": "F"}.get(
        d.get("Tense"), "0")
    if d.get("Mood") == "Cnd":
        tense = "C"
    return ("V" + kind + mood + tense + f(d, "Person", PERSON) +
            f(d, "Number", NUMBER) + f(d, "Gender", GENDER))


def verb_bundles():
    out = [{}]
    for mood, tenses in (("Ind", ["Pres", "Past", "Imp", "Pqp", "Fut"]),
                         ("Cnd", [None]), ("Sub", ["Pres", "Imp", "Fut"]),
                         ("Imp", [None])):
        for tense in tenses:
            for person in ("1", "2", "3"):
                for number in ("Sing", "Plur"):
                    d = {"VerbForm": "Fin", "Mood": mood, "Person": person,
                         "Number": number}
                    if tense:
                        d["Tense"] = tense
                    out.append(d)
    out.append({"VerbForm": "Inf"})
    for person in ("1", "2", "3"):
        for number in ("Sing", "Plur"):
            out.append({"VerbForm": "Inf", "Person": person, "Number": number})
    out.append({"VerbForm": "Ger"})
    out.append({"VerbForm": "Part"})
    for gender in GENDER:
        for number in NUMBER:
            out.append({"VerbForm": "Part", "Gender": gender, "Number": number})
            out.append({"VerbForm": "Part", "Gender": gender, "Number": number,
                        "Voice": "Pass"})
    out += bundles({"Mood": ["Ind", "Sub", "Cnd", "Imp"],
                    "Tense": ["Pres", "Past", "Imp", "Pqp", "Fut"],
                    "Person": ["1", "2", "3"], "Number": ["Sing", "Plur"]})
    return out


def noun_tag(d):
    degree = {"Aug": "A", "Dim": "D"}.get(d.get("Degree"), "0")
    return "NC" + f(d, "Gender", GENDER, "C") + f(d, "Number", NUMBER, "N") + "00" + degree


def propn_tag(d):
    cls = {"Prs": "SP", "Geo": "G0", "Org": "O0", "Oth": "V0"}.get(d.get("NameType"), "00")
    return "NP00" + cls + "0"


def pron_tag(d):
    kind = {"Prs": "P", "Dem": "D", "Int": "T", "Rel": "R", "Ind": "I",
            "Exc": "E", "Tot": "I", "Neg": "I"}.get(d.get("PronType"), "0")
    if d.get("Poss") == "Yes":
        kind = "X"
    case = {"Nom": "N", "Acc": "A", "Dat": "D", "Obl": "O"}.get(d.get("Case"), "0")
    return ("P" + kind + f(d, "Person", PERSON) + f(d, "Gender", GENDER, "C") +
            f(d, "Number", NUMBER, "N") + case + "000")


def adj_tag(d):
    kind = "O" if d.get("NumType") == "Ord" else "Q"
    degree = {"Sup": "S", "Abs": "S", "Cmp": "C"}.get(d.get("Degree"), "0")
    return "A" + kind + degree + f(d, "Gender", GENDER, "C") + f(d, "Number", NUMBER, "N") + "0"


def det_tag(d):
    kind = {"Art": "A", "Dem": "D", "Prs": "P", "Int": "T", "Exc": "E",
            "Ind": "I", "Tot": "I"}.get(d.get("PronType"), "0")
    if d.get("NumType") == "Card":
        kind = "N"
    return ("D" + kind + f(d, "Person", PERSON) + f(d, "Gender", GENDER, "C") +
            f(d, "Number", NUMBER, "N") + "0")


PUNCT = [
    ({}, "Fz"), ({"PunctType": "Peri"}, "Fp"), ({"PunctType": "Comm"}, "Fc"),
    ({"PunctType": "Colo"}, "Fd"), ({"PunctType": "Semi"}, "Fx"),
    ({"PunctType": "Dash"}, "Fg"), ({"PunctType": "Quot"}, "Fe"),
    ({"PunctType": "Qest", "PunctSide": "Ini"}, "Fia"),
    ({"PunctType": "Qest", "PunctSide": "Fin"}, "Fit"),
    ({"PunctType": "Excl", "PunctSide": "Ini"}, "Faa"),
    ({"PunctType": "Excl", "PunctSide": "Fin"}, "Fat"),
    ({"PunctType": "Brck", "PunctSide": "Ini"}, "Fpa"),
    ({"PunctType": "Brck", "PunctSide": "Fin"}, "Fpt"),
    ({"PunctType": "Sqbr", "PunctSide": "Ini"}, "Fca"),
    ({"PunctType": "Sqbr", "PunctSide": "Fin"}, "Fct"),
    ({"PunctType": "Elip"}, "Fs"), ({"PunctType": "Slsh"}, "Fh"),
    ({"PunctType": "Pcnt"}, "Ft"),
]


def rows():
    gen = {
        "NOUN": (bundles({"Gender": list(GENDER), "Number": list(NUMBER),
                          "Degree": ["Aug", "Dim"]}), noun_tag),
        "VERB": (verb_bundles(), lambda d: verb_tag("M", d)),
        "AUX": (verb_bundles(), lambda d: verb_tag("A", d)),
        "PROPN": (bundles({"NameType": ["Prs", "Geo", "Org", "Oth"],
                           "Gender": list(GENDER), "Number": list(NUMBER)}), propn_tag),
        "PRON": (bundles({"PronType": ["Prs", "Dem", "Int", "Rel", "Ind", "Tot", "Neg"],
                          "Person": list(PERSON), "Gender": list(GENDER),
                          "Number": list(NUMBER), "Case": ["Nom", "Acc", "Dat"],
                          "Poss": ["Yes"]}), pron_tag),
        "ADJ": (bundles({"Gender": list(GENDER), "Number": list(NUMBER),
                         "Degree": ["Sup", "Abs", "Cmp"], "NumType": ["Ord"]}), adj_tag),
        "DET": (bundles({"PronType": ["Art", "Dem", "Prs", "Int", "Ind", "Tot"],
                         "Gender": list(GENDER), "Number": list(NUMBER),
                         "Definite": ["Def", "Ind"], "NumType": ["Card"]}), det_tag),
        "ADP": ([{}, {"AdpType": "Prep"}, {"AdpType": "Prep", "Contraction": "Yes"}],
                lambda d: "SP"),
        "NUM": ([{}], lambda d: "Z"),
        "PUNCT": ([b for b, _ in PUNCT], dict((tuple(sorted(b.items())), t) for b, t in PUNCT)),
        "CCONJ": ([{}], lambda d: "CC"),
        "SCONJ": ([{}], lambda d: "CS"),
        "INTJ": ([{}], lambda d: "I"),
        "ADV": ([{}, {"PronType": "Neg"}], lambda d: "RN" if d else "RG"),
    }
    for category, count in COUNTS.items():
        pool, tag = gen[category]
        seen = set()
        emitted = 0
        for d in pool:
            key = tuple(sorted(d.items()))
            if key in seen:
                continue
            seen.add(key)
            eagles = tag[key] if isinstance(tag, dict) else tag(d)
            features = "|".join(f"{k}={v}" for k, v in key)
            yield category, features, eagles
            emitted += 1
            if emitted == count:
                break
        if emitted != count:
            sys.exit(f"{category}: pool has only {emitted} bundles, need {count}")


def main():
    out = sys.stdout
    out.write("# UD category + features -> EAGLES (Portuguese, FreeLing style).\n")
    out.write("# Fixture rows generated by tools/make_tagmap_rules.py.\n")
    out.write("category,features,eagles\n")
    for category, features, eagles in rows():
        out.write(f"{category},{features},{eagles}\n")


if __name__ == "__main__":
    main()
