#!/usr/bin/env python3
"""Generate demo/studies.tsv: a synthetic descriptor corpus.

Deterministic (fixed seed). Documents simulate indexed studies on energy
transition topics; each draws a handful of descriptors from a topic
profile so that seeds like "Solar Power" produce lively pennants at
min_co around 5, and "Climate Change" behaves as a dominant broad term.

Run from the repository root:

    python demo/make_demo_corpus.py
    pennant index demo/studies.tsv -o demo/studies.idx
"""

import random
from pathlib import Path

BROAD = ["Climate Change", "Economic Development", "Public Opinion", "Employment"]

PROFILES = {
    "Solar Power": [
        "Photovoltaics", "Energy Storage", "Grid Integration", "Rural Electrification",
        "Subsidies", "Technology Adoption", "Electricity Markets", "Battery Technology",
    ],
    "Wind Power": [
        "Offshore Installations", "Grid Integration", "Energy Storage", "Land Use",
        "Electricity Markets", "Noise Effects", "Technology Adoption", "Subsidies",
    ],
    "Coal": [
        "Air Quality", "Health Effects", "Mining Communities", "Plant Retirement",
        "Emissions Trading", "Electricity Markets", "Employment",
    ],
    "Carbon Pricing": [
        "Emissions Trading", "Tax Policy", "Industrial Competitiveness",
        "Electricity Markets", "Regulation", "Public Opinion",
    ],
    "Energy Storage": [
        "Battery Technology", "Grid Integration", "Photovoltaics", "Electricity Markets",
        "Materials Science", "Technology Adoption",
    ],
    "Rural Electrification": [
        "Solar Power", "Developing Countries", "Microgrids", "Household Income",
        "Infrastructure", "Subsidies",
    ],
}


def main() -> None:
    rng = random.Random(2024)
    rows = []
    doc_no = 0
    for topic, related in PROFILES.items():
        for _ in range(55):
            doc_no += 1
            terms = {topic}
            terms.update(rng.sample(related, rng.randint(2, min(5, len(related)))))
            # broad descriptors saturate some literatures
            for broad in BROAD:
                if rng.random() < (0.65 if broad == "Climate Change" else 0.18):
                    terms.add(broad)
            rows.append((f"s{doc_no:04d}", sorted(terms)))
    # background documents carrying only broad descriptors
    for _ in range(40):
        doc_no += 1
        rows.append((f"s{doc_no:04d}", sorted(rng.sample(BROAD, rng.randint(1, 3)))))

    out = Path(__file__).parent / "studies.tsv"
    with out.open("w", encoding="utf-8", newline="\n") as fh:
        fh.write("# synthetic demo corpus: energy transition studies\n")
        for doc_id, terms in rows:
            fh.write(f"{doc_id}\t{'|'.join(terms)}\n")
    print(f"wrote {out} ({len(rows)} documents)")


if __name__ == "__main__":
    main()
