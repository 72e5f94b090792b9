#!/usr/bin/env python3
"""Regenerates fixture.csv (120 papers, 30 eligible authors, 20 colon titles).

The output is committed; rerun only when the fixture needs to change, and
refreeze every golden value that depends on it.
"""
import csv
import io
import random
import sys
import unicodedata

rng = random.Random(20250131)

EligibleNames = [
    "Alice Chen", "Bruno Silva", "Carla Rossi", "Dmitri Volkov", "Elena Petrova",
    "Farid Haddad", "Grace Okafor", "Hiroshi Tanaka", "Ingrid Larsen", "Jamal Wright",
    "Kavya Iyer", "Lukas Becker", "Mei Lin", "Nadia Kowalski", "Oscar Mendes",
    "Priya Raman", "Quentin Dubois", "Rosa Alvarez", "Sven Nilsson", "Tariq Aziz",
    "Uma Patel", "Victor Hugo Lima", "Wen Zhao", "Ximena Ortiz", "Yusuf Demir",
    "Zoe Martin", "Anaïs Lefèvre", "Björn Sjöberg", "René Müller", "Élodie Garnier",
]

GuestFirst = ["Sam", "Lee", "Kim", "Ari", "Noa", "Eli", "Max", "Ola", "Ivy", "Jon",
              "Rae", "Tom", "Ada", "Bea", "Cal", "Dov", "Eva", "Fay", "Gus", "Hal"]
GuestLast = ["Park", "Ng", "Holt", "Reyes", "Fox", "Stone"]

Adjectives = ["Scalable", "Interactive", "Progressive", "Uncertainty-Aware", "Hierarchical",
              "Narrative", "Immersive", "Perceptual", "Sparse", "Guided", "Adaptive", "Visual"]
Nouns = ["Exploration", "Summaries", "Layouts", "Encodings", "Comparisons", "Dashboards",
         "Provenance", "Annotations", "Projections", "Glyphs"]
Tasks = ["Time Series", "Multivariate Networks", "Text Corpora", "Genomic Data",
         "Trajectories", "Sensor Streams", "Ensembles", "Tabular Data", "Code Reviews",
         "Climate Models", "Social Media", "Sports Analytics"]

ColonTitles = [
    "VisFlow: Dataflow Diagrams for Exploratory Analysis",
    "visflow: A Second Look at Pipelines",
    "Lumen: Illuminating Sparse Matrices",
    "Orbit: Radial Layouts for Dynamic Hierarchies",
    "Quill: Annotating Charts in Natural Language",
    "Tessera: Tiled Summaries of Spatial Data",
    "Prism: Splitting Color Channels for Accessibility",
    "Harbor: Safe Defaults for Novice Chart Authors",
    "Ember: Heatmaps that Fade with Uncertainty",
    "Kestrel: Hovering Over Large Graphs",
    "Mosaic: Scalable Linked Views",
    "Tide: Rhythms in Periodic Data",
    "Atlas: Mapping the Space of Chart Designs",
    "Beacon: Guiding Attention in Dashboards",
    "Cairn: Landmarks for Navigating Trees",
    "Drift: Detecting Concept Change Visually",
    "Fathom: Dataflow Diagrams for Exploratory Analysis",
    "Sonder: Empathy in Data Stories: A Case Study",
    "Glint:Reflections on Glyph Design",
    "Nimbus: Weather Ensembles at a Glance",
]
NearMisses = [
    "Reflections on Ratio:",
    ": A Title That Starts With a Colon",
]

Venues = ["VIS", "EuroVis", "CHI", "TVCG", "PacificVis"]


def plain_title():
    return f"{rng.choice(Adjectives)} {rng.choice(Nouns)} of {rng.choice(Tasks)}"


def main(out_path):
    guests = [f"{f} {l}" for f in GuestFirst for l in GuestLast]
    rng.shuffle(guests)
    guest_uses = {}

    titles = set()
    plain = []
    while len(plain) < 120 - len(ColonTitles) - len(NearMisses):
        t = plain_title()
        if t not in titles:
            titles.add(t)
            plain.append(t)
    all_titles = ColonTitles + NearMisses + plain
    rng.shuffle(all_titles)

    rows = []
    for i, title in enumerate(all_titles):
        authors = [EligibleNames[i % 30]]
        if rng.random() < 0.25:
            co = rng.choice(EligibleNames)
            if co not in authors:
                authors.append(co)
        for _ in range(rng.choice([0, 1, 1, 2])):
            g = rng.choice(guests)
            if guest_uses.get(g, 0) < 2 and g not in authors:
                guest_uses[g] = guest_uses.get(g, 0) + 1
                authors.append(g)
        rng.shuffle(authors)
        year = rng.randint(1998, 2025)
        venue = rng.choice(Venues)
        r = rng.random()
        if r < 0.7:
            doi = f"10.1109/TVCG.{year}.{rng.randint(1000000, 9999999)}"
            url = ""
        elif r < 0.9:
            doi = ""
            url = f"https://example.org/papers/{i}"
        else:
            doi, url = "", ""
        rows.append([title, "|".join(authors), str(year), venue, doi, url])

    # Decomposed spelling of an eligible name: must merge with the NFC form.
    for row in rows:
        if "René Müller" in row[1]:
            row[1] = row[1].replace("René Müller", unicodedata.normalize("NFD", "René Müller"))
            break
    # Irregular whitespace that normalization must collapse.
    rows[5][0] = "  " + rows[5][0].replace(" ", "   ", 1) + " "

    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["title", "authors", "year", "venue", "doi", "url"])
    w.writerows(rows)
    with open(out_path, "w", encoding="utf-8", newline="") as f:
        f.write(buf.getvalue())


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "fixture.csv")
