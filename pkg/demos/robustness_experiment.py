"""Random versus targeted node removal on a scale-free coupling graph.

Sweeps the removal fraction and prints mean reachable fractions for
both modes. Random removal degrades roughly linearly; removing the
top-degree hub classes collapses reachability almost immediately.
"""

import statistics

from couplaw import SynthParams, build_graphs, generate
from couplaw.robustness import RemovalExperiment, run_experiment


def main():
    corpus = generate(SynthParams(n_classes=5000, seed_size=3,
                                  edges_per_class={"aggregation": 2},
                                  alpha=0.0, rng_seed=42))
    graphs = build_graphs(corpus)

    print("fraction  random(mean of 10)  targeted")
    for pct in range(0, 35, 5):
        fraction = pct / 100
        random_exp = run_experiment(graphs, RemovalExperiment(
            mode="random", fraction=fraction, trials=10, rng_seed=1))
        targeted_exp = run_experiment(graphs, RemovalExperiment(
            mode="targeted_by_degree", fraction=fraction))
        print(f"  {fraction:4.2f}     {statistics.mean(random_exp.results):8.4f}"
              f"          {targeted_exp.results[0]:8.4f}")


if __name__ == "__main__":
    main()
