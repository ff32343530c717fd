#!/usr/bin/env python3
"""Generate the bundled mini-corpus, its verb occurrence rows and a toy
sentence-pair dataset.

Four verbs are used in two senses each, alongside unambiguous landmark verbs
for every sense. Each sense has its own pools of subjects, objects, places
and adjectives, so the contexts of an ambiguous verb fall into two groups.

Usage: make_minicorpus.py OUTDIR
"""

import random
import sys
from pathlib import Path

SENSES = {
    # (ambiguous verb, sense): (landmark, subjects, objects, places, adjectives)
    ("draw", "art"): ("depict", ["artist", "painter", "child"], ["picture", "portrait", "sketch"],
                      ["studio", "gallery"], ["colourful", "detailed"]),
    ("draw", "weapon"): ("pull", ["soldier", "cowboy", "thief"], ["sword", "gun", "knife"],
                         ["battlefield", "saloon"], ["sharp", "loaded"]),
    ("file", "paper"): ("register", ["lawyer", "clerk", "employee"], ["report", "claim", "complaint"],
                        ["office", "court"], ["formal", "written"]),
    ("file", "tool"): ("smooth", ["carpenter", "worker", "craftsman"], ["nail", "edge", "plank"],
                       ["workshop", "shed"], ["rough", "wooden"]),
    ("charge", "legal"): ("accuse", ["police", "officer", "prosecutor"], ["suspect", "criminal", "driver"],
                          ["station", "trial"], ["guilty", "reckless"]),
    ("charge", "power"): ("power", ["engineer", "technician", "student"], ["battery", "phone", "laptop"],
                          ["lab", "garage"], ["electric", "portable"]),
    ("run", "business"): ("manage", ["manager", "owner", "director"], ["company", "shop", "firm"],
                          ["city", "market"], ["profitable", "small"]),
    ("run", "sport"): ("race", ["athlete", "runner", "champion"], ["marathon", "sprint", "lap"],
                       ["stadium", "track"], ["fast", "long"]),
}

AMBIGUOUS_PER_SENSE = 16
LANDMARK_PER_SENSE = 9


def sentence(rng, verb, subjects, objects, places, adjectives):
    subj = rng.choice(subjects)
    obj = rng.choice(objects)
    place = rng.choice(places)
    tokens = ["the_OTHER", f"{subj}_NOUN", f"{verb}_VERB", "a_OTHER"]
    if rng.random() < 0.5:
        tokens.append(f"{rng.choice(adjectives)}_ADJ")
    tokens += [f"{obj}_NOUN", "in_OTHER", "the_OTHER", f"{place}_NOUN"]
    return " ".join(tokens), subj, obj


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "data")
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(20131)

    plan = []
    for (verb, _sense), (landmark, subjects, objects, places, adjectives) in SENSES.items():
        plan += [(verb, subjects, objects, places, adjectives)] * AMBIGUOUS_PER_SENSE
        plan += [(landmark, subjects, objects, places, adjectives)] * LANDMARK_PER_SENSE
    rng.shuffle(plan)

    corpus, occurrences = [], []
    for sid, (verb, subjects, objects, places, adjectives) in enumerate(plan):
        text, subj, obj = sentence(rng, verb, subjects, objects, places, adjectives)
        corpus.append(text)
        occurrences.append(f"{verb}_VERB\tSUBJ={subj}_NOUN;OBJ={obj}_NOUN\t{sid}")

    (out / "minicorpus.txt").write_text("\n".join(corpus) + "\n")
    (out / "occurrences.tsv").write_text("\n".join(occurrences) + "\n")

    # Each ambiguous verb against its two landmarks, in the context of one
    # sense: the matching landmark is judged similar, the other one not.
    rows = []
    pair = 0
    for (verb, sense), (landmark, subjects, objects, _p, _a) in SENSES.items():
        other = next(v[0] for (w, s), v in SENSES.items() if w == verb and s != sense)
        if len(rows) >= 10:
            break
        for target, scores in ((landmark, "6,7,6"), (other, "2,1,2")):
            if len(rows) >= 10:
                break
            pair += 1
            subj, obj = subjects[pair % 3], objects[pair % 3]
            first = f"SUBJ={subj}_NOUN;VERB={verb}_VERB;OBJ={obj}_NOUN"
            second = f"SUBJ={subj}_NOUN;VERB={target}_VERB;OBJ={obj}_NOUN"
            rows.append(f"p{pair:02d}\t{first}\t{second}\t{scores}")
    (out / "toy_dataset.tsv").write_text("\n".join(rows) + "\n")


if __name__ == "__main__":
    main()
