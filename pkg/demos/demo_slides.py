"""Curve sliding on a genus-one piece: eliminating mu letters step by step.

Run:  python3 demos/demo_slides.py
"""

from trisect import (
    format_state,
    initial_state,
    parse_word,
    reduce_full,
    reduce_mu,
    trace_lines,
)

# The attaching word lives in the letters mu and lambda.  reduce_mu slides
# curves until every mu has been absorbed into the twisting count t3.
word = parse_word("M M L M L L M")
state = initial_state(word)
print("start:", format_state(state))

final, trace = reduce_mu(state)
print("after reduce_mu:", format_state(final))
print("that took %d moves:" % len(trace))
for line in trace_lines(state, trace):
    print("  ", line)

# reduce_full keeps going: the lambdas are consumed one at a time, with the
# last one absorbed by the closing isotopy, so t1 ends at n-1.
done, full = reduce_full(initial_state(parse_word("MMLL")))
print("\nfull reduction of MMLL:", format_state(done))
print("total moves:", len(full))

# Every move conserves the mu count; watch t3 pick them up.
s = initial_state(parse_word("MMM"))
print("\nmu count stays %d while t3 grows:" % s.counts()[0])
f, t = reduce_mu(s)
print("  final:", format_state(f))
