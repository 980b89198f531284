"""
Classifying words by their exceptional roots
============================================

Omega = {0, 1, phi, phi-1}.  A root outside Omega, or a repeated root in
Omega, gives a free subgroup; otherwise the word has k <= 4.
"""

from tracelab import enumerate_words, parse_word, rosenberger_verdict

for text in ["x y x y", "x y", "x y^2"]:
    v = rosenberger_verdict(parse_word(text))
    print(f"{text:<10} {v.tag.value:<24} witness {v.witness_text()}")

# census of every word with at most three syllables
census = enumerate_words(3)
print(census.total, "words")
for tag, count in census.counts.items():
    print(f"  {tag.value:<24} {count}")

# repeated exceptional roots already occur at k = 3
for v in census.multiple_root_witnesses[:5]:
    print(" ", v.word, "double root at", v.witness_text(), " tau =", v.tau)
