"""Beyond two users: every subset of transmitters gets a sum-rate bound.

For K users sharing the channel, the achievable region is cut out by one
inequality per nonempty subset S: the rates in S sum to at most the
capacity of the pooled power in S.  Two users give back the familiar
pentagon; three users already need seven faces.  This script prints the
constraint systems and shows the two-user specialization is literally the
pentagon's half-spaces.

Run:  python demos/polymatroid_constraints.py
"""

from macregions import (
    ChannelConfig,
    PerUser,
    polymatroid_region,
    superposition_region,
)


def show(powers, ch):
    k = len(powers)
    print(f"\n{k} users, powers {powers}, N = {ch.noise_power:g}:")
    for c in polymatroid_region(powers, ch):
        users = " + ".join(f"R{i + 1}" for i in c.users)
        print(f"  {users:<18} <= {c.bound:.10f}")


def main():
    ch = ChannelConfig(noise_power=1.0)

    show([1.0, 1.0], ch)
    print("\nsame thing straight from the two-user region constructor:")
    region = superposition_region(PerUser(1.0, 1.0), ch)
    for h in region.halfspaces:
        print(f"  {h.a1:+.0f}*R1 {h.a2:+.0f}*R2 <= {h.b:.10f}")

    show([1.0, 1.0, 1.0], ch)
    show([4.0, 1.0, 0.25], ch)

    # uneven powers shift every face the pooled power touches
    cons = polymatroid_region([4.0, 1.0, 0.25], ch)
    grand = cons[-1]
    print(f"\ngrand coalition bound log2(1 + {4.0 + 1.0 + 0.25}) "
          f"= {grand.bound:.10f} bits")


if __name__ == "__main__":
    main()
