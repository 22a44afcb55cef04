import subprocess
import sys

import pytest
import torch

import gnntrainer as gt


def _motif_corpus_files(root):
    """A 40-graph corpus with two planted motifs, one per class.

    Every graph is a chain of four linked parts.  Positives close a triangle
    over the last three parts and tag them alpha; negatives close the full
    four-cycle and stay beta.  Separable by construction, and the examples,
    background knowledge and modes are definite-clause text: the graphs come
    out of the upstream dataset builder, which this package only talks to
    through its CLI and the TU files.
    """
    n, parts = 40, 4
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
    modes = """
:- modeh(class(+gid,#classlabel)).
:- modeb(*,part(+gid,-pid)).
:- modeb(*,joins(+gid,+pid,+pid)).
:- modeb(1,tagged(+pid,#tag)).
"""
    root.joinpath("bk.pl").write_text("\n".join(bk) + "\n")
    root.joinpath("modes.pl").write_text(modes)
    root.joinpath("examples.pl").write_text("\n".join(examples) + "\n")


@pytest.fixture(scope="session")
def motif_tu(tmp_path_factory):
    """TU files for the motif corpus, produced by the upstream CLI."""
    root = tmp_path_factory.mktemp("motif")
    _motif_corpus_files(root)
    out = root / "tu"
    command = [
        sys.executable, "-m", "botgraph.cli", "dataset",
        "--bk", str(root / "bk.pl"),
        "--modes", str(root / "modes.pl"),
        "--examples", str(root / "examples.pl"),
        "--depth", "2", "--format", "tu", "--name", "motif",
        "--out", str(out),
    ]
    proc = subprocess.run(command, capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    return out, "motif"


@pytest.fixture(scope="session")
def motif_graphs(motif_tu):
    directory, name = motif_tu
    return gt.load_tu(directory, name)


@pytest.fixture()
def small_graph():
    """A fixed 6-vertex graph used by the layer and gradient checks."""
    torch.manual_seed(7)
    features = torch.rand(6, 5, dtype=torch.float64)
    upper = (torch.rand(6, 6) > 0.6).double().triu(1)
    adjacency = upper + upper.T
    return features, adjacency
