"""End to end: definite-clause examples to a trained graph classifier.

Builds a small corpus with one planted motif per class (positives close a
triangle of alpha-tagged parts, negatives a beta four-cycle), exports it with
the command-line driver, then hands the TU files to the trainer package.
Requires `gnntrainer` (see trainer/) to be installed.
"""
import subprocess
import sys
import tempfile
from pathlib import Path

import gnntrainer as gt


def write_corpus(root: Path, n: int = 40, parts: int = 4):
    bk = ["classlabel(pos).", "classlabel(neg).", "tag(alpha).", "tag(beta)."]
    examples = []
    for i in range(1, n + 1):
        gid = f"g{i}"
        label = "pos" if i % 2 == 1 else "neg"
        bk.append(f"gid({gid}).")
        ids = [f"p{i}_{k}" for k in range(1, parts + 1)]
        bk.extend(f"pid({p})." for p in ids)
        body = [f"part({gid},{p})" for p in ids]
        body += [f"joins({gid},{a},{b})" for a, b in zip(ids, ids[1:])]
        tags = ["beta"] * parts
        if label == "pos":
            body.append(f"joins({gid},{ids[1]},{ids[3]})")  # alpha triangle
            tags[1] = tags[2] = tags[3] = "alpha"
        else:
            body.append(f"joins({gid},{ids[0]},{ids[3]})")  # beta four-cycle
        body += [f"tagged({p},{t})" for p, t in zip(ids, tags)]
        examples.append(f"class({gid},{label}) :- " + ", ".join(body) + ".")
    root.joinpath("bk.pl").write_text("\n".join(bk) + "\n")
    root.joinpath("modes.pl").write_text(
        ":- modeh(class(+gid,#classlabel)).\n"
        ":- modeb(*,part(+gid,-pid)).\n"
        ":- modeb(*,joins(+gid,+pid,+pid)).\n"
        ":- modeb(1,tagged(+pid,#tag)).\n")
    root.joinpath("examples.pl").write_text("\n".join(examples) + "\n")


with tempfile.TemporaryDirectory() as tmp:
    root = Path(tmp)
    write_corpus(root)
    out = root / "tu"
    print("Exporting bottom-graphs through the CLI...")
    subprocess.run(
        [sys.executable, "-m", "botgraph.cli", "dataset",
         "--bk", str(root / "bk.pl"), "--modes", str(root / "modes.pl"),
         "--examples", str(root / "examples.pl"),
         "--depth", "2", "--format", "tu", "--name", "motif", "--out", str(out)],
        check=True)

    graphs = gt.load_tu(out, "motif")
    print(f"\nLoaded {len(graphs)} graphs, feature width {gt.feature_width(graphs)}")

    train_set, test_set = gt.split_dataset(graphs, 0.7, seed=0)
    train_scaled, stats = gt.standardise_features(train_set)
    test_scaled = stats.apply(test_set)

    config = gt.TrainConfig(max_epochs=150, patience=150)
    result = gt.train(train_scaled, gt.ModelSpec(variant=1, m=128), config, seed=0)

    train_acc = gt.evaluate(result.model, train_scaled)
    test_acc = gt.evaluate(result.model, test_scaled)
    print(f"\nGCN variant, m=128: best validation epoch {result.best_epoch}")
    print(f"train accuracy {train_acc:.2f}, test accuracy {test_acc:.2f}")

    metrics = root / "metrics.json"
    result.save_metrics(metrics, test_accuracy=test_acc)
    result.save_checkpoint(root / "model.pt")
    print(f"metrics written to {metrics.name}, checkpoint to model.pt")
    reloaded = gt.load_checkpoint(root / "model.pt")
    assert gt.predict(reloaded, test_scaled) == gt.predict(result.model, test_scaled)
    print("checkpoint reloads and reproduces the predictions")
