"""The experiment harness: lemma consequences verified at desk scale.

Universally quantified implications can FAIL with replayable
counterexamples; existence claims searched within bounds report
INCONCLUSIVE when nothing turns up.  Everything is deterministic given the
recorded parameters.
"""

import json

from fclab.harness import (
    broken_responder,
    run_experiment,
    verify_fooling_consequence,
    verify_inexpressibility_witnesses,
    verify_pseudo_congruence,
    verify_semilinear_gap,
    verify_strategy_lemmas,
)


def show(report):
    print(f"{report.id}: {report.status} "
          f"({report.instances_checked} instances, {report.seconds}s)")
    for w in report.witnesses[:3]:
        print("   witness:", json.dumps(w))
    for c in report.counterexamples[:3]:
        print("   counterexample:", json.dumps(c))


# engine replies obey the forced-copy and prefix/suffix properties
show(verify_strategy_lemmas(max_len=4, k_max=2))

# ... and the checks can fail: a deliberately broken engine double
show(verify_strategy_lemmas(max_len=3, k_max=1,
                            responder=broken_responder, responder_name="broken"))

# concatenation compatibility of equivalence under shared-factor conditions,
# plus the swapped-exponent certificate a^q b^p ~ a^p b^p
show(verify_pseudo_congruence(k=1, max_len=4))

# a member/non-member pair the one-round game cannot tell apart
show(verify_inexpressibility_witnesses("anbn", k=1, bound=8))
show(verify_inexpressibility_witnesses("l5", k=1, bound=4))

# the exponent-swap consequence on the co-primitive block pair
show(verify_fooling_consequence())

# no small semilinear set matches the powers of two; the evens control finds its match
show(verify_semilinear_gap(4))
show(verify_semilinear_gap(2, target="evens"))

# experiments are addressable by id (same registry the CLI and API use)
show(run_experiment("witnesses_l3", k=1, bound=6))
