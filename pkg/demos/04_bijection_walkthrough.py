"""Step-by-step trace of the column-subtraction correspondence on the
fully worked pair, plus the bounded certification.
"""

from qschur import ColoredPartition, forward, forward_bounded, inverse

P = ColoredPartition.from_text

pi1 = P("a6+a5+a3+a2+a1")
pi2 = P("b9+b8+b6+b4+b2+b1")
t = forward(pi1, pi2)

print("input pair:")
print("  pi1 =", pi1)
print("  pi2 =", pi2)
print("step 1: split pi2 at threshold i =", len(pi1))
print("  pi4 =", t.pi4, " (parts <= i)")
print("  pi5 =", t.pi5)
print("step 2: conjugate pi4 with circled column bottoms, add to pi1")
print("  pi4* rows:", t.pi4_star, " (True marks a circled row end)")
print("  pi6 =", t.pi6, " (circled rows became ab-parts)")
print("step 3+4: stack pi5 over pi6, subtract the staircase")
for s, d in zip(t.c1, t.c2):
    print(f"   {str(s):>4} | {d}")
print("step 5: reorder the colored column")
for s, d in zip(t.c1r, t.c2):
    print(f"   {str(s):>4} | {d}")
print("step 6: add back ->", t.pi3)

back = inverse(t.pi3)
print("\ninverse recovers:", back[0], "/", back[1])
assert back == (pi1, pi2)

# Weight is conserved at every stage.
total = pi1.sigma + pi2.sigma
assert t.pi5.sigma + t.pi6.sigma == total
assert sum(s.weight for s in t.c1) + sum(t.c2) == total
assert t.pi3.sigma == total
print("weight conserved:", total)

# The bounded variant certifies where every color lands.
trace, cert = forward_bounded(pi1, pi2, L=9, M=17)
print("\nbound certificate at (L=9, M=17):")
print("  boundary statistics:", (cert.nu_l, cert.nu_m))
print("  a-parts <=", cert.a_bound, "| b-parts <=", cert.b_bound,
      "| ab-parts <=", cert.ab_bound)
