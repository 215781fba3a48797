"""Debug captures: every metric can show exactly which tokens it counted.

Evaluates a small Polish document, then walks the capture lists that
accompany each metric value and writes the machine-readable debug CSV.
The negated sentence shows the sentence-level counting rule: when a
sentence matches, all of its tokens are captured, not just the trigger
words.

Run:  python3 demos/debug_captures.py
"""

from pathlib import Path

from stylovec import evaluate_all, parse_conllu, registry_for
from stylovec.output import write_debug_csv

DOCUMENT = """\
# language = pl
1\tNie\tnie\tPART\t_\t_\t2\tadvmod:neg\t_\t_
2\tznam\tznać\tVERB\t_\tAspect=Imp|Tense=Pres|VerbForm=Fin\t0\troot\t_\t_
3\ttej\tten\tDET\t_\tCase=Gen|PronType=Dem\t4\tdet\t_\t_
4\tksiążki\tksiążka\tNOUN\t_\tCase=Gen|Number=Sing\t2\tobj\t_\tSpaceAfter=No
5\t.\t.\tPUNCT\t_\t_\t2\tpunct\t_\t_

1\tCzytam\tczytać\tVERB\t_\tAspect=Imp|Tense=Pres|VerbForm=Fin\t0\troot\t_\t_
2\tbardzo\tbardzo\tADV\t_\t_\t3\tadvmod\t_\t_
3\tszybko\tszybko\tADV\t_\t_\t1\tadvmod\t_\tSpaceAfter=No
4\t.\t.\tPUNCT\t_\t_\t1\tpunct\t_\t_
"""


def main() -> None:
    document = parse_conllu(DOCUMENT, doc_id="notes")
    registry = registry_for("pl")
    vector = evaluate_all(registry, document)

    print(f"document: {document.token_count} tokens, "
          f"{len(document.sentences)} sentences")
    for sentence in document.sentences:
        print(f"    {sentence.text}")
    print()

    print("metrics that matched, with the exact tokens they counted:")
    for result in vector.results:
        if not result.captured:
            continue
        forms = [document.sentences[si].tokens[ti].form
                 for si, ti in result.captured]
        print(f"  {result.metric_id:<18} value {result.value:.3f}  "
              f"tokens {forms}")
    print()

    negated = next(r for r in vector.results if r.metric_id == "SY_S_NEG")
    forms = [document.sentences[si].tokens[ti].form
             for si, ti in negated.captured]
    print(f"SY_S_NEG captured the whole negated sentence: {forms}")
    print(f"value = {len(negated.captured)} captured tokens "
          f"/ {document.token_count} document tokens = {negated.value:.3f}\n")

    out = Path(__file__).parent / "output" / "notes.debug.csv"
    out.parent.mkdir(exist_ok=True)
    rows = write_debug_csv(vector, document, out)
    print(f"wrote {rows} capture rows to {out}; first lines:")
    for line in out.read_text(encoding="utf-8").splitlines()[:5]:
        print(f"    {line}")


if __name__ == "__main__":
    main()
