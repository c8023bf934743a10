#!/usr/bin/env python3
"""Regenerate data/dictionary.txt.

Produces a deterministic sample dictionary of pronounceable pseudo-words:
for every length 6-15 and every initial a-s, at least three words, plus the
10-letter 'z' sentinel bucket and several glossed words per length.
"""

import random

CONSONANTS = "bcdfglmnprstv"
VOWELS = "aeiou"

GLOSSES = [
    "herb", "mineral", "fabric", "vessel", "ritual", "bird", "tool",
    "dwelling", "garment", "dance", "spice", "melody", "stream",
]

WORDS_PER_BUCKET = 3
EXTRA_GLOSSED_PER_LENGTH = 6


def make_word(rng, initial, length):
    # Alternate consonant/vowel runs after the initial letter.
    word = initial
    vowel_next = initial not in VOWELS
    while len(word) < length:
        pool = VOWELS if vowel_next else CONSONANTS
        word += rng.choice(pool)
        vowel_next = not vowel_next
    return word


def main():
    rng = random.Random(20120915)
    entries = []
    seen = set()

    def add(initial, length, gloss=None):
        for _ in range(1000):
            w = make_word(rng, initial, length)
            if w not in seen:
                seen.add(w)
                entries.append((w, gloss))
                return w
        raise RuntimeError(f"bucket exhausted: {initial} {length}")

    for length in range(6, 16):
        glossed = 0
        for initial in "abcdefghijklmnopqrs":
            for i in range(WORDS_PER_BUCKET):
                gloss = None
                if glossed < EXTRA_GLOSSED_PER_LENGTH and i == 0:
                    gloss = rng.choice(GLOSSES)
                    glossed += 1
                add(initial, length, gloss)
    # Sentinel bucket for the wordlist method.
    for _ in range(3):
        add("z", 10)

    with open("data/dictionary.txt", "w") as f:
        f.write("# Sample dictionary: word[TAB]gloss, one entry per line.\n")
        for word, gloss in entries:
            f.write(word + ("\t" + gloss if gloss else "") + "\n")
    print(f"{len(entries)} entries written")


if __name__ == "__main__":
    main()
