"""Benchmark the compiled edit-distance kernels against the pure-Python
fallback, on the raw kernels and on end-to-end sentence alignment.

Usage: python benchmarks/bench_kernels.py [--pairs 2000] [--repeat 3]
"""

import argparse
import importlib
import random
import statistics
import time

from peet import _editops_py

try:
    from peet import _editops

    HAVE_COMPILED = True
except ImportError:
    _editops = None
    HAVE_COMPILED = False


def make_words(rng, n, length=(3, 9)):
    return [
        "".join(rng.choices("abcdefghijklmnop", k=rng.randint(*length)))
        for _ in range(n)
    ]


def bench(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times), statistics.mean(times)


def bench_kernels(impl, word_pairs, token_pairs, repeat):
    def chars():
        for a, b in word_pairs:
            impl.char_distance(a, b)

    def tokens():
        for a, b in token_pairs:
            impl.token_distance(a, b)

    return bench(chars, repeat), bench(tokens, repeat)


def bench_alignment(backend_env, sentence_pairs, repeat):
    """Re-imports the alignment stack with the kernel backend forced, then
    times full extract_edits over the corpus."""
    import os

    import peet.align
    import peet.classify
    import peet.kernels

    if backend_env:
        os.environ["PEET_PURE_PYTHON"] = "1"
    else:
        os.environ.pop("PEET_PURE_PYTHON", None)
    importlib.reload(peet.kernels)
    importlib.reload(peet.align)
    importlib.reload(peet.classify)
    from peet.corpus_io import annotate

    annotated = [
        (annotate(src), annotate(trg)) for src, trg in sentence_pairs
    ]

    def run():
        peet.align.char_similarity.cache_clear()
        for src, trg in annotated:
            peet.classify.extract_edits(src, trg)

    result = bench(run, repeat)
    return peet.kernels.BACKEND, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pairs", type=int, default=2000)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    rng = random.Random(7)
    vocab = make_words(rng, 400)
    word_pairs = [(rng.choice(vocab), rng.choice(vocab)) for _ in range(args.pairs * 5)]
    token_pairs = [
        (rng.choices(vocab, k=rng.randint(5, 20)), rng.choices(vocab, k=rng.randint(5, 20)))
        for _ in range(args.pairs)
    ]
    sentence_pairs = []
    for _ in range(args.pairs):
        words = rng.sample(vocab, rng.randint(6, 16))
        edited = list(words)
        for _ in range(rng.randint(0, 3)):
            k = rng.randrange(len(edited))
            edited[k] = rng.choice(vocab)
        sentence_pairs.append((" ".join(words), " ".join(edited)))

    print(f"{args.pairs} sentence pairs, repeat={args.repeat}, best-of times\n")
    print(f"{'benchmark':<34}{'python':>12}{'compiled':>12}{'speedup':>10}")

    py_char, py_tok = bench_kernels(_editops_py, word_pairs, token_pairs, args.repeat)
    if HAVE_COMPILED:
        c_char, c_tok = bench_kernels(_editops, word_pairs, token_pairs, args.repeat)
        print(
            f"{'char_distance x' + str(len(word_pairs)):<34}"
            f"{py_char[0]:>11.3f}s{c_char[0]:>11.3f}s{py_char[0] / c_char[0]:>9.1f}x"
        )
        print(
            f"{'token_distance x' + str(len(token_pairs)):<34}"
            f"{py_tok[0]:>11.3f}s{c_tok[0]:>11.3f}s{py_tok[0] / c_tok[0]:>9.1f}x"
        )
    else:
        print(f"{'char_distance':<34}{py_char[0]:>11.3f}s{'n/a':>12}")
        print(f"{'token_distance':<34}{py_tok[0]:>11.3f}s{'n/a':>12}")

    py_backend, py_align = bench_alignment(True, sentence_pairs, args.repeat)
    assert py_backend == "python"
    if HAVE_COMPILED:
        c_backend, c_align = bench_alignment(False, sentence_pairs, args.repeat)
        assert c_backend == "compiled"
        print(
            f"{'extract_edits corpus':<34}"
            f"{py_align[0]:>11.3f}s{c_align[0]:>11.3f}s{py_align[0] / c_align[0]:>9.1f}x"
        )
    else:
        print(f"{'extract_edits corpus':<34}{py_align[0]:>11.3f}s{'n/a':>12}")
        print("\ncompiled extension not built; showing fallback only")


if __name__ == "__main__":
    main()
