"""Smoke test for the verma_py extension module."""

import json

import verma_py


def main():
    assert verma_py.u_prime(2) == "(W(-2) - 3/(4*hW) W(-1)^2).v"
    assert verma_py.subsingular(1, 2) == "(L(-1)^2 + 6/c W(-2)).v"

    ch = verma_py.characters(order=5)
    assert ch["V"] == [1, 2, 5, 10, 20, 36], ch

    assert verma_py.tensor_verdict("1", "17/8", "-1/8", "1/2", "0") == "Irreducible"
    assert verma_py.tensor_verdict("1", "17/8", "-1/8", "0", "1") == "Reducible"

    report = json.loads(verma_py.run_job("singular", {"p": "3", "symbolic": "hW"}))
    (vector,) = report["results"]["vectors"]
    assert vector["text"] == "(W(-3) - 2/hW W(-2)W(-1) + 1/hW^2 W(-1)^3).v", vector["text"]

    try:
        verma_py.run_job("subsingular", {"p": "0", "r": "1", "hW": "1"})
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")

    print("smoke test passed")


if __name__ == "__main__":
    main()
