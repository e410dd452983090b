"""Command-line front end for the full pipeline.

Machine-readable results (CSV/JSON) go to stdout, diagnostics to stderr.
Exit codes: 0 success, 1 usage error, 2 data/format error, 3 numerical
failure. A ``--config`` file of ``key=value`` lines supplies defaults;
explicit flags win.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from peet import classify, corpus_io, features, gec_metrics, model, ranking
from peet.errors import DataError, LineCountMismatch, NumericalError, PeetError


class UsageError(Exception):
    pass


class ArgParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read(path) -> str:
    return Path(path).read_text(encoding="utf-8")


def _write_out(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _print_json(obj) -> None:
    print(json.dumps(obj))


def _annotate_pairs(pairs, src_sidecar=None, trg_sidecar=None):
    src_rows = corpus_io.parse_sidecar(_read(src_sidecar)) if src_sidecar else None
    trg_rows = corpus_io.parse_sidecar(_read(trg_sidecar)) if trg_sidecar else None
    for rows, label in ((src_rows, "source"), (trg_rows, "target")):
        if rows is not None and len(rows) != len(pairs):
            raise LineCountMismatch(
                f"{label} sidecar has {len(rows)} sentences for {len(pairs)} pairs"
            )
    annotated = []
    for k, pair in enumerate(pairs):
        src = corpus_io.annotate(pair.source, src_rows[k] if src_rows else None)
        trg = corpus_io.annotate(pair.target, trg_rows[k] if trg_rows else None)
        annotated.append((src, trg))
    return annotated


def _extract_one(task):
    src_text, trg_text, merge_adjacent = task
    src = corpus_io.annotate(src_text)
    trg = corpus_io.annotate(trg_text)
    return classify.extract_edits(src, trg, merge_adjacent=merge_adjacent)


def _parallel_map(fn, tasks, jobs: int):
    tasks = list(tasks)
    if jobs <= 1 or len(tasks) < 2:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks, chunksize=max(1, len(tasks) // (jobs * 4))))


def cmd_extract(args) -> int:
    pairs = corpus_io.parse_parallel(_read(args.src), _read(args.trg))
    merge_adjacent = not args.split_edits
    if args.src_sidecar or args.trg_sidecar:
        annotated = _annotate_pairs(pairs, args.src_sidecar, args.trg_sidecar)
        edit_lists = [
            classify.extract_edits(s, t, merge_adjacent=merge_adjacent)
            for s, t in annotated
        ]
        sources = [s for s, _ in annotated]
    else:
        tasks = [(p.source, p.target, merge_adjacent) for p in pairs]
        edit_lists = _parallel_map(_extract_one, tasks, args.jobs)
        sources = [corpus_io.annotate(p.source) for p in pairs]
    docs = []
    for src, edits in zip(sources, edit_lists):
        doc = corpus_io.M2Document(tuple(src.surfaces()), {0: []})
        for e in edits:
            doc.annotations[0].append(
                corpus_io.M2Edit(
                    start=e.span.src_span[0],
                    end=e.span.src_span[1],
                    label=e.label,
                    correction=e.span.trg_text(),
                )
            )
        docs.append(doc)
    _write_out(args, corpus_io.emit_m2_file(docs))
    return 0


def _featurize_one(task):
    src_text, trg_text, orig_text, level_value = task
    level = features.FeatureLevel(level_value)
    src = corpus_io.annotate(src_text)
    trg = corpus_io.annotate(trg_text)
    if orig_text is None:
        return features.featurize(classify.extract_edits(src, trg), src, trg, level)
    orig = corpus_io.annotate(orig_text)
    a_edits = classify.extract_edits(orig, trg)
    c_edits = classify.extract_edits(orig, src)
    incorrect, ignored = classify.edit_set_partition(a_edits, c_edits)
    return features.featurize(incorrect, src, trg, level, ignored_edits=ignored)


def cmd_featurize(args) -> int:
    level = features.FeatureLevel(args.level)
    extended = level in (features.FeatureLevel.EXTENDED, features.FeatureLevel.EXTENDED_FULL)
    if extended and not args.orig:
        raise UsageError("extended levels need --orig (the original source file)")
    if args.records:
        records = corpus_io.parse_time_annotations(_read(args.records))
        sources = [r.source for r in records]
        targets = [r.correction for r in records]
        seconds = [r.seconds for r in records]
    elif args.src and args.trg:
        pairs = corpus_io.parse_parallel(_read(args.src), _read(args.trg))
        sources = [p.source for p in pairs]
        targets = [p.target for p in pairs]
        if args.times:
            seconds = [float(x) for x in _read(args.times).split()]
            if len(seconds) != len(pairs):
                raise LineCountMismatch(
                    f"{len(seconds)} times for {len(pairs)} sentence pairs"
                )
        else:
            print("note: no --times given; seconds column written as 0", file=sys.stderr)
            seconds = [0.0] * len(pairs)
    else:
        raise UsageError("need --records or both --src and --trg")
    origs: list[str | None] = [None] * len(sources)
    if extended:
        orig_lines = _read(args.orig).splitlines()
        if len(orig_lines) != len(sources):
            raise LineCountMismatch(
                f"--orig has {len(orig_lines)} lines for {len(sources)} pairs"
            )
        origs = list(orig_lines)
    tasks = [
        (s, t, o, level.value) for s, t, o in zip(sources, targets, origs)
    ]
    rows = _parallel_map(_featurize_one, tasks, args.jobs)
    _write_out(args, features.write_features_csv(rows, seconds))
    return 0


def cmd_train(args) -> int:
    rows, seconds = features.read_features_csv(_read(args.features))
    seeds = range(args.seed, args.seed + args.seeds)
    reports, fitted, summary = model.evaluate_over_seeds(
        rows,
        seconds,
        kind=args.kind,
        seeds=seeds,
        ratio=args.ratio,
        alpha=args.alpha,
        C=args.C,
        epsilon=args.epsilon,
    )
    if args.out:
        Path(args.out).write_text(model.to_json(fitted), encoding="utf-8")
    if not fitted.converged:
        print("warning: SVR did not converge; best iterate kept", file=sys.stderr)
    _print_json(summary)
    return 0


def cmd_predict(args) -> int:
    m = model.from_json(_read(args.model))
    rows, _ = features.read_features_csv(_read(args.features))
    preds = model.predict_rows(m, rows)
    lines = ["prediction"] + [repr(float(p)) for p in preds]
    _write_out(args, "\n".join(lines) + "\n")
    return 0


def cmd_evaluate(args) -> int:
    m = model.from_json(_read(args.model))
    rows, seconds = features.read_features_csv(_read(args.features))
    report = model.evaluate(m, list(zip(rows, seconds)))
    _print_json({"mae": report.mae, "pearson_r": report.pearson_r, "n": report.n})
    return 0


def cmd_coefficients(args) -> int:
    m = model.from_json(_read(args.model))
    lines = ["name,coefficient"]
    for name, coef in model.standardized_coefficients(m):
        lines.append(f"{name},{coef!r}")
    _write_out(args, "\n".join(lines) + "\n")
    return 0


def _m2_edit_lists(docs, annotator=None):
    per_sentence = []
    for doc in docs:
        if annotator is not None:
            per_sentence.append(doc.annotations.get(annotator, []))
        else:
            per_sentence.append([doc.annotations[a] for a in sorted(doc.annotations)])
    return per_sentence


def cmd_score_gec(args) -> int:
    hyp_docs = corpus_io.parse_m2(_read(args.hyp))
    ref_docs = corpus_io.parse_m2(_read(args.ref))
    if len(hyp_docs) != len(ref_docs):
        raise LineCountMismatch(
            f"{len(hyp_docs)} hypothesis sentences vs {len(ref_docs)} references"
        )
    hyp = _m2_edit_lists(hyp_docs, annotator=0)
    refs = [lists or [[]] for lists in _m2_edit_lists(ref_docs)]
    prf = gec_metrics.multi_ref_score(hyp, refs)
    _print_json(
        {
            "precision": round(100 * prf.precision, 2),
            "recall": round(100 * prf.recall, 2),
            "f05": round(100 * prf.f, 2),
        }
    )
    return 0


def cmd_iaa(args) -> int:
    sets = []
    n_docs = None
    for path in args.m2_files:
        docs = corpus_io.parse_m2(_read(path))
        if n_docs is None:
            n_docs = len(docs)
        elif len(docs) != n_docs:
            raise LineCountMismatch(f"{path} has {len(docs)} sentences, expected {n_docs}")
        sets.append([doc.annotations.get(0, []) for doc in docs])
    scores, average = gec_metrics.iaa(sets, seed=args.seed)
    _print_json(
        {
            "scores": [round(s, 2) for s in scores],
            "average": round(average, 2),
        }
    )
    return 0


def cmd_wer(args) -> int:
    pairs = corpus_io.parse_parallel(_read(args.hyp), _read(args.ref))
    values = [gec_metrics.wer(p.source.split(), p.target.split()) for p in pairs]
    _print_json({"mean_wer": sum(values) / len(values), "n": len(values)})
    return 0


def _rank_one(task):
    model_json, name, outputs, refs, agg, metric = task
    if metric == "wer":
        score = ranking.wer_score_system(name, outputs, refs, agg=agg)
    else:
        m = model.from_json(model_json)
        score = ranking.peet_score_system(m, name, outputs, refs, agg=agg)
    return score


def cmd_rank(args) -> int:
    if args.metric == "peet" and not args.model:
        raise UsageError("--model is required for the peet metric")
    model_json = _read(args.model) if args.model else ""
    ref_columns = [_read(path).splitlines() for path in args.refs]
    n = len(ref_columns[0])
    for path, col in zip(args.refs, ref_columns):
        if len(col) != n:
            raise LineCountMismatch(f"reference file {path} has {len(col)} lines, expected {n}")
    refs = [[col[i] for col in ref_columns] for i in range(n)]
    system_files = sorted(Path(args.systems).glob("*"))
    system_files = [p for p in system_files if p.is_file()]
    if not system_files:
        raise DataError(f"no system output files in {args.systems}")
    tasks = []
    for path in system_files:
        outputs = path.read_text(encoding="utf-8").splitlines()
        if len(outputs) != n:
            raise LineCountMismatch(f"{path} has {len(outputs)} lines, expected {n}")
        tasks.append((model_json, path.stem, outputs, refs, args.ref_agg, args.metric))
    scores = _parallel_map(_rank_one, tasks, args.jobs)
    ranked = ranking.rank_systems(scores)
    lines = ["name,mean_seconds,n_sentences,rank"]
    for s in ranked:
        lines.append(f"{s.name},{s.mean_seconds!r},{s.n_sentences},{s.rank}")
    _write_out(args, "\n".join(lines) + "\n")
    return 0


def _read_csv_column(path, value_col):
    import csv as _csv

    with open(path, newline="", encoding="utf-8") as fh:
        reader = _csv.DictReader(fh)
        rows = list(reader)
    if not rows or "name" not in (reader.fieldnames or []):
        raise DataError(f"{path} must be a CSV with a 'name' column")
    if value_col not in (reader.fieldnames or []):
        raise DataError(f"{path} has no column {value_col!r}")
    return {row["name"]: float(row[value_col]) for row in rows}


def cmd_correlate(args) -> int:
    xs_by_name = _read_csv_column(args.scores, args.x_col)
    ys_by_name = _read_csv_column(args.hjr, args.y_col)
    scores = [
        ranking.SystemScore(name=n, mean_seconds=v, n_sentences=0)
        for n, v in xs_by_name.items()
    ]
    table = ranking.HjrTable(tuple(ys_by_name.items()))
    result = ranking.correlate_with_hjr(scores, table)
    _print_json(result)
    return 0


def cmd_filter_dataset(args) -> int:
    records = corpus_io.parse_time_annotations(_read(args.records))
    filtered = corpus_io.filter_by_time(records, max_seconds=args.max_seconds)
    merged = filtered if args.no_merge else corpus_io.merge_duplicates(filtered)
    Path(args.out).write_text(corpus_io.emit_time_annotations(merged), encoding="utf-8")
    _print_json(
        {
            "input": len(records),
            "after_filter": len(filtered),
            "after_merge": len(merged),
        }
    )
    return 0


def cmd_assign(args) -> int:
    from peet.service import plan_assignments

    item_ids = [line for line in _read(args.items).splitlines() if line.strip()]
    plan = plan_assignments(item_ids, args.variations, args.editors, seed=args.seed)
    lines = ["item_id,variation,editor"]
    for item_id, variation, editor in plan.entries:
        lines.append(f"{item_id},{variation},{editor}")
    _write_out(args, "\n".join(lines) + "\n")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from peet.service import SessionStore, create_app

    store = SessionStore(args.data_dir)
    if args.restore:
        restored = store.restore()
        print(f"restored {restored} sessions", file=sys.stderr)
    uvicorn.run(create_app(store), host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> ArgParser:
    parser = ArgParser(prog="peet", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=fn)
        p.add_argument("--config", help="key=value defaults file")
        return p

    p = add("extract", cmd_extract, "extract typed edits from a parallel file pair as M2")
    p.add_argument("--src", required=True)
    p.add_argument("--trg", required=True)
    p.add_argument("--split-edits", action="store_true", help="one span per edit op")
    p.add_argument("--src-sidecar")
    p.add_argument("--trg-sidecar")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")

    p = add("featurize", cmd_featurize, "emit a feature CSV with a seconds target column")
    p.add_argument("--records", help="time-annotation JSONL")
    p.add_argument("--src")
    p.add_argument("--trg")
    p.add_argument("--times", help="one seconds value per line")
    p.add_argument("--orig", help="original source file (extended levels)")
    p.add_argument(
        "--level", default="25", choices=[l.value for l in features.FeatureLevel]
    )
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")

    p = add("train", cmd_train, "train a time-to-correct model over seeded splits")
    p.add_argument("--features", required=True)
    p.add_argument("--kind", default="ridge", choices=[model.KIND_RIDGE, model.KIND_SVR])
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--C", type=float, default=1.0)
    p.add_argument("--epsilon", type=float, default=0.1)
    p.add_argument("--seeds", type=int, default=1, help="number of split seeds")
    p.add_argument("--seed", type=int, default=42, help="first split seed")
    p.add_argument("--ratio", type=float, default=0.8)
    p.add_argument("--out", help="model JSON path")

    p = add("predict", cmd_predict, "predict seconds for each feature row")
    p.add_argument("--model", required=True)
    p.add_argument("--features", required=True)
    p.add_argument("--out")

    p = add("evaluate", cmd_evaluate, "MAE and Pearson r of a model on a feature CSV")
    p.add_argument("--model", required=True)
    p.add_argument("--features", required=True)

    p = add("coefficients", cmd_coefficients, "standardized coefficients by impact")
    p.add_argument("--model", required=True)
    p.add_argument("--out")

    p = add("score-gec", cmd_score_gec, "P/R/F0.5 of hypothesis M2 against reference M2")
    p.add_argument("--hyp", required=True)
    p.add_argument("--ref", required=True)

    p = add("iaa", cmd_iaa, "inter-annotator agreement across correction sets")
    p.add_argument("m2_files", nargs="+")
    p.add_argument("--seed", type=int, default=42)

    p = add("wer", cmd_wer, "mean word error rate between two parallel files")
    p.add_argument("--hyp", required=True)
    p.add_argument("--ref", required=True)

    p = add("rank", cmd_rank, "rank system outputs by estimated time-to-correct")
    p.add_argument("--model")
    p.add_argument("--systems", required=True, help="directory of system output files")
    p.add_argument("--refs", nargs="+", required=True)
    p.add_argument("--metric", default="peet", choices=["peet", "wer"])
    p.add_argument("--ref-agg", default="min", choices=["min", "mean"])
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")

    p = add("correlate", cmd_correlate, "correlate a ranking CSV with an HJR CSV")
    p.add_argument("--scores", required=True)
    p.add_argument("--hjr", required=True)
    p.add_argument("--x-col", default="mean_seconds")
    p.add_argument("--y-col", default="score")

    p = add("filter-dataset", cmd_filter_dataset, "time filter + duplicate merge")
    p.add_argument("--records", required=True)
    p.add_argument("--max-seconds", type=float, default=250.0)
    p.add_argument("--no-merge", action="store_true")
    p.add_argument("--out", required=True)

    p = add("assign", cmd_assign, "plan editor-to-variation assignments")
    p.add_argument("--items", required=True, help="file of item ids, one per line")
    p.add_argument("--variations", nargs="+", required=True)
    p.add_argument("--editors", nargs="+", required=True)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--out")

    p = add("serve", cmd_serve, "run the timed-annotation HTTP service")
    p.add_argument("--data-dir", required=True)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--restore", action="store_true")

    return parser


def _expand_config(argv: list[str]) -> list[str]:
    if "--config" not in argv:
        return argv
    idx = argv.index("--config")
    if idx + 1 >= len(argv):
        raise UsageError("--config needs a file argument")
    if idx == 0:
        raise UsageError("--config must follow a subcommand")
    entries = []
    for lineno, line in enumerate(_read(argv[idx + 1]).splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise UsageError(f"config line {lineno}: expected key=value")
        key, value = line.split("=", 1)
        entries.append((key.strip().replace("_", "-"), value.strip()))
    tokens = []
    for key, value in entries:
        if value.lower() == "true":
            tokens.append(f"--{key}")
        elif value.lower() == "false":
            continue
        else:
            tokens.append(f"--{key}")
            tokens.extend(value.split())
    # insert right after the subcommand so explicit flags still win
    return [argv[0], *tokens, *argv[1:]]


def main(argv=None) -> int:
    raw = list(sys.argv[1:] if argv is None else argv)
    try:
        expanded = _expand_config(raw)
        parser = build_parser()
        args = parser.parse_args(expanded)
        return args.func(args) or 0
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # argparse --help
        return 0 if exc.code in (0, None) else 1
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 3
    except (DataError, PeetError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
