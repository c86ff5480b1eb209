"""Pass/fail report trees.

Every failing check carries a witness (the offending basis tuple together
with both evaluated sides) so that a red run is directly actionable.
Rendering order is the insertion order, which all producers keep
deterministic.
"""

import json
import time


PASS, FAIL, SKIP = "pass", "fail", "skip"


class Report:
    def __init__(self, name):
        self.name = name
        self.items = []  # (name, status, witness-or-None)
        self.children = []
        self._t0 = time.perf_counter()
        self.elapsed = None

    def check(self, name, ok, witness=None):
        if ok:
            self.items.append((name, PASS, None))
        else:
            if witness is None:
                raise ValueError(f"failing check {name!r} needs a witness")
            self.items.append((name, FAIL, witness))
        return ok

    def expect_equal(self, name, lhs, rhs, where=None):
        """Check lhs == rhs, recording both sides on failure."""
        ok = lhs == rhs
        if ok:
            self.items.append((name, PASS, None))
        else:
            witness = {"lhs": repr(lhs), "rhs": repr(rhs)}
            if where is not None:
                witness["at"] = repr(where)
            self.items.append((name, FAIL, witness))
        return ok

    def skip(self, name, reason):
        self.items.append((name, SKIP, {"reason": reason}))

    def sub(self, name):
        child = Report(name)
        self.children.append(child)
        return child

    def finish(self):
        self.elapsed = time.perf_counter() - self._t0
        return self

    @property
    def passed(self):
        return not self.failures()

    def failures(self):
        out = [(self.name, name, witness) for name, status, witness in self.items if status == FAIL]
        for child in self.children:
            out.extend(child.failures())
        return out

    def counts(self):
        n_pass = sum(1 for _, s, _ in self.items if s == PASS)
        n_fail = sum(1 for _, s, _ in self.items if s == FAIL)
        n_skip = sum(1 for _, s, _ in self.items if s == SKIP)
        for child in self.children:
            p, f, s = child.counts()
            n_pass, n_fail, n_skip = n_pass + p, n_fail + f, n_skip + s
        return n_pass, n_fail, n_skip

    def to_dict(self, include_timing=False):
        d = {
            "name": self.name,
            "checks": [
                {"name": n, "status": s, **({"witness": w} if w is not None else {})}
                for n, s, w in self.items
            ],
            "children": [c.to_dict(include_timing) for c in self.children],
        }
        if include_timing and self.elapsed is not None:
            d["elapsed_seconds"] = round(self.elapsed, 6)
        return d

    def to_json(self, include_timing=False):
        return json.dumps(self.to_dict(include_timing), indent=2, sort_keys=False)

    def render(self, indent=0):
        pad = "  " * indent
        lines = [f"{pad}[{self.name}]"]
        for name, status, witness in self.items:
            lines.append(f"{pad}  {status.upper():4s} {name}")
            if status == FAIL:
                for key in sorted(witness):
                    lines.append(f"{pad}       {key}: {witness[key]}")
            elif status == SKIP and witness:
                lines.append(f"{pad}       reason: {witness['reason']}")
        for child in self.children:
            lines.append(child.render(indent + 1))
        return "\n".join(lines)

    def __str__(self):
        return self.render()
