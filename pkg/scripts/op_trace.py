"""Print the generation stream with the operation that produced each word.

    python scripts/op_trace.py 4
"""
import sys

from dyckcat.cat_engine import GenState, step


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    s = GenState(n)
    prev = None
    while step(s):
        c = s.counters
        now = (c.op1, c.op2, c.op3)
        if prev is None:
            op = "root" if s.emitted == 1 else "?"
        elif now == prev:
            op = "apex"
        else:
            op = ("op1", "op2", "op3")[[a != b for a, b in zip(now, prev)].index(True)]
        prev = now
        w = s.logical().bits
        buf = "".join(map(str, s.word.buffer))
        print(f"{s.emitted:>5}  {op:<4} {w}  label={s.label}  cursor={s.word.cursor}  buffer={buf}")


if __name__ == "__main__":
    main()
