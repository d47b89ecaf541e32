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
"""Writes the shipped thesaurus TSVs and their manifests into data/lexicon/."""

import os
import sys
import unicodedata

EUROVOC_NS = "http://agatha.example/eurovoc/criminal-law/"
ONTO_NS = "http://agatha.example/onto#"

# Portuguese labels, curated for this project. Category sizes follow the
# criminal-law micro-thesaurus classification (9/133/22/3).
EUROVOC = {
    "Actor": [
        "criminoso", "delinquente", "vítima", "cúmplice", "recluso", "detido",
        "arguido", "testemunha", "reincidente",
    ],
    "Event": [
        "crime", "infração", "delito", "contravenção", "criminalidade",
        "crime organizado", "terrorismo", "branqueamento de capitais",
        "tráfico de droga", "tráfico de seres humanos", "corrupção", "fraude",
        "fraude fiscal", "homicídio", "assassínio", "roubo", "furto", "burla",
        "violação", "abuso sexual", "exploração sexual", "pedofilia", "rapto",
        "sequestro", "tomada de reféns", "desvio de avião", "pirataria",
        "contrafação", "falsificação", "falsificação de moeda", "contrabando",
        "extorsão", "chantagem", "agressão", "violência", "violência doméstica",
        "maus-tratos", "assédio", "assédio sexual", "difamação", "calúnia",
        "injúria", "infanticídio", "genocídio", "crime de guerra",
        "crime contra a humanidade", "tortura", "criminalidade informática",
        "cibercrime", "vandalismo", "fogo posto", "tráfico de armas",
        "tráfico de órgãos", "imigração clandestina", "auxílio à imigração ilegal",
        "evasão fiscal", "suborno", "peculato", "abuso de poder", "prevaricação",
        "delinquência juvenil", "reincidência", "pena", "pena de morte",
        "pena de prisão", "prisão perpétua", "sanção penal", "pena acessória",
        "pena suspensa", "liberdade condicional", "trabalho comunitário",
        "detenção", "prisão preventiva", "extradição", "expulsão", "deportação",
        "amnistia", "indulto", "perdão", "reabilitação", "reinserção social",
        "processo penal", "ação penal", "investigação criminal", "inquérito",
        "julgamento", "condenação", "absolvição", "sentença penal",
        "mandado de detenção", "mandado de detenção europeu",
        "cooperação judiciária penal", "confisco", "apreensão", "perda de bens",
        "responsabilidade penal", "cumplicidade", "tentativa de crime",
        "premeditação", "legítima defesa", "circunstância agravante",
        "circunstância atenuante", "prescrição", "registo criminal",
        "escuta telefónica", "busca domiciliária", "interrogatório", "evasão",
        "motim", "tráfico de influências", "abuso de informação privilegiada",
        "manipulação de mercado", "esquema ponzi",
        "usurpação de identidade", "ameaça", "coação", "homicídio por negligência",
        "negligência", "ofensa à integridade física", "assalto",
        "assalto à mão armada", "furto qualificado", "recetação", "dano",
        "tráfico de estupefacientes", "posse ilegal de arma",
        "condução sob o efeito do álcool",
        "escravatura", "trabalho forçado", "mutilação genital feminina",
        "casamento forçado", "crime de ódio", "incitamento ao ódio",
    ],
    "Place": [
        "prisão", "estabelecimento prisional", "penitenciária", "cadeia",
        "centro de detenção", "centro educativo", "reformatório", "tribunal",
        "tribunal penal", "tribunal penal internacional", "esquadra",
        "posto policial", "cena do crime", "local do crime", "cela", "banco",
        "fronteira", "zona de fronteira", "centro de acolhimento",
        "estabelecimento de reinserção", "casa de correção", "colónia penal",
    ],
    "Object": ["arma", "droga", "multa"],
}

# Extended-ontology sub-classes, verbatim.
EXTENDED = {
    "Actor": "Victim,Inmate,Prisoner,Hostage,Hijacker,Accomplice",
    "Event": ("Slavery,Trade,Tax,Evasion,Spoofing,Slander,Shady,Violence,Sexual,"
              "Scam,Repentance,Rehabilitation,Refoulement,Rape,Punishment,Ponzi,"
              "Piracy,Aggression,Phishing,Trafficking,Pardon,Harassment,Mobbing,"
              "Misdemeanour,Libel,Trading,Imprisonment,Restraint,Theft,Arrest,"
              "Homicide,Hit-and-run,Hijacking,Forgery,Forfeiture,Fraud,Fight,"
              "Falsification,Extradition,Expulsion,Elimination,Offence,Drug,"
              "Detention,Deprivation,Deportation,Defamation,Penalty,Negligence,"
              "Execution,Counterfeit,Corruption,Confiscation,Conditional,Con,Order,"
              "Complicity,Campaign,Bully,Breach,Banish,Aggravate,Crime,Abduction"),
    "Object": "Fine,Invoice,Bill",
    "Place": ("Facility,Institution,Center,Confinement,Reformatory,Penitentiary,"
              "Penal,Prison,Jail,Isolation,Banco"),
}

ORDER = ["Actor", "Event", "Place", "Object"]
EUROVOC_COUNTS = {"Actor": 9, "Event": 133, "Place": 22, "Object": 3}


def slug(term):
    ascii_term = unicodedata.normalize("NFKD", term).encode("ascii", "ignore").decode()
    return "-".join(ascii_term.lower().replace("-", " ").split())


def write(path, header, rows):
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        for line in header:
            out.write(f"# {line}\n")
        for row in rows:
            out.write("\t".join(row) + "\n")


def write_manifest(path, counts):
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        out.write("category,count\n")
        for category in ORDER:
            out.write(f"{category},{counts[category]}\n")
        out.write(f"TOTAL,{sum(counts.values())}\n")


def main(outdir):
    rows, counts = [], {}
    for category in ORDER:
        terms = EUROVOC[category]
        if len(set(terms)) != len(terms):
            sys.exit(f"duplicate term in {category}")
        if len(terms) != EUROVOC_COUNTS[category]:
            sys.exit(f"{category}: {len(terms)} terms, expected {EUROVOC_COUNTS[category]}")
        counts[category] = len(terms)
        rows += [(t, category, EUROVOC_NS + slug(t), "EUROVOC_CRIMINAL_LAW") for t in terms]
    write(os.path.join(outdir, "eurovoc_criminal_law.tsv"),
          ["Criminal-law micro-thesaurus terms classified as Actor/Event/Place/Object.",
           "PLACEHOLDER CONTENT: Portuguese labels curated for this project; category",
           "sizes follow the official classification, the terms and IRIs do not come",
           "from the official Eurovoc release. Replace concept_iri with official",
           "identifiers when available.",
           "term<TAB>category<TAB>concept_iri<TAB>source"], rows)
    write_manifest(os.path.join(outdir, "eurovoc_criminal_law.manifest.csv"), counts)

    rows, counts = [], {}
    for category in ORDER:
        terms = EXTENDED[category].split(",")
        counts[category] = len(terms)
        rows += [(t, category, ONTO_NS + t, "EXTENDED_ONTOLOGY") for t in terms]
    write(os.path.join(outdir, "extended_ontology.tsv"),
          ["Extended-ontology sub-classes of Actor, Event, Object and Place.",
           "term<TAB>category<TAB>concept_iri<TAB>source"], rows)
    write_manifest(os.path.join(outdir, "extended_ontology.manifest.csv"), counts)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/lexicon")
