"""Quickstart: from annotated text to a normalized style vector.

Parses two small English documents supplied inline in CoNLL-U form,
evaluates the full English metric registry over them, prints the
strongest signals, and writes the vectors to a CSV next to this script.

Run:  python3 demos/quickstart.py
"""

from pathlib import Path

from stylovec import evaluate_all, parse_conllu, registry_for
from stylovec.output import write_vectors_csv

LETTER = """\
# language = en
1\tI\ti\tPRON\t_\tPronType=Prs\t3\tnsubj\t_\t_
2\tdo\tdo\tAUX\t_\tTense=Pres|VerbForm=Fin\t3\taux\t_\t_
3\tmiss\tmiss\tVERB\t_\tVerbForm=Inf\t0\troot\t_\t_
4\tyou\tyou\tPRON\t_\tPronType=Prs\t3\tobj\t_\tSpaceAfter=No
5\t.\t.\tPUNCT\t_\t_\t3\tpunct\t_\t_

1\tWill\twill\tAUX\t_\tVerbForm=Fin\t3\taux\t_\t_
2\tyou\tyou\tPRON\t_\tPronType=Prs\t3\tnsubj\t_\t_
3\twrite\twrite\tVERB\t_\tVerbForm=Inf\t0\troot\t_\tSpaceAfter=No
4\t?\t?\tPUNCT\t_\t_\t3\tpunct\t_\t_
"""

REPORT = """\
# language = en
1\tThe\tthe\tDET\t_\t_\t2\tdet\t_\t_
2\tbridge\tbridge\tNOUN\t_\tNumber=Sing\t4\tnsubj:pass\t_\t_
3\twas\tbe\tAUX\t_\tTense=Past|VerbForm=Fin\t4\taux:pass\t_\t_
4\tinspected\tinspect\tVERB\t_\tTense=Past|VerbForm=Part|Voice=Pass\t0\troot\t_\t_
5\tyesterday\tyesterday\tADV\t_\t_\t4\tadvmod\t_\tSpaceAfter=No
6\t.\t.\tPUNCT\t_\t_\t4\tpunct\t_\t_

1\tRepairs\trepair\tNOUN\t_\tNumber=Plur\t4\tnsubj:pass\t_\t_
2\twill\twill\tAUX\t_\tVerbForm=Fin\t4\taux\t_\t_
3\tbe\tbe\tAUX\t_\tVerbForm=Inf\t4\taux:pass\t_\t_
4\tscheduled\tschedule\tVERB\t_\tTense=Past|VerbForm=Part|Voice=Pass\t0\troot\t_\tSpaceAfter=No
5\t.\t.\tPUNCT\t_\t_\t4\tpunct\t_\t_
"""


def main() -> None:
    registry = registry_for("en")
    print(f"English registry: {len(registry)} metrics "
          f"in categories {', '.join(registry.categories())}\n")

    vectors = []
    for doc_id, payload in (("letter", LETTER), ("report", REPORT)):
        document = parse_conllu(payload, doc_id=doc_id)
        vector = evaluate_all(registry, document)
        vectors.append(vector)

        print(f"--- {doc_id} ({document.token_count} tokens) ---")
        for sentence in document.sentences:
            print(f"    {sentence.text}")
        ranked = sorted(
            zip(vector.metric_ids, vector.values), key=lambda kv: -kv[1])
        print("  strongest signals:")
        for metric_id, value in ranked[:6]:
            description = registry.get(metric_id).descriptor.description
            print(f"    {metric_id:<22} {value:.3f}  ({description})")
        print()

    out = Path(__file__).parent / "output" / "quickstart_vectors.csv"
    out.parent.mkdir(exist_ok=True)
    rows = write_vectors_csv(vectors, out)
    print(f"wrote {rows} vector rows x {len(registry)} metrics to {out}")

    # Every value is a plain ratio: raw matches / document tokens.
    letters = vectors[0]
    passive = dict(zip(letters.metric_ids, letters.values))["VG_PASSIVE"]
    print(f"\nletter VG_PASSIVE = {passive:.3f} "
          "(no passive verb group in the letter, as expected)")


if __name__ == "__main__":
    main()
