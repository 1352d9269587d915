"""
Locating a fault one round at a time
====================================

A fault at an unknown vertex makes detectors ring in growing waves: in
round i exactly the code vertices within distance i raise an alarm.  A
memoryless monitor must name the fault from one round's alarms alone; a
monitor with memory may use the whole history.  Universal success by
round r is precisely weak (memoryless) or light (with memory) validity.
"""

from idcodes import FamilySpec, build_cycle, build_path, check_code
from idcodes.rounds import DetectionMode, Scenario, detection_universal

# A weak 2-code on the 12-cycle locates every fault memorylessly.
g = build_cycle(12)
code = [2, 3, 8, 9]
scenario = Scenario(g, code, max_round=2)

print("alarm waves for a fault at vertex 0:")
for i in range(3):
    print(f"  round {i}: alarms {set(scenario.alarm_set(0, i)) or '{}'}")

outcome = scenario.outcome(0, DetectionMode.MEMORYLESS)
print(f"located at round {outcome.located_round}\n")

# The round at which each fault becomes unambiguous is exactly the radius
# the static verifier certifies for it.
report = check_code(g, code, FamilySpec.weak(2))
print("fault -> locating round (= certified radius):")
for out in scenario.outcomes(DetectionMode.MEMORYLESS):
    certified = report.certificate.per_vertex[out.fault][0]
    print(f"  {out.fault:2d} -> {out.located_round}  (certificate says {certified})")

# A light-but-not-weak code needs memory: single rounds stay ambiguous
# for some faults, histories do not.
p = build_path(5)
light_code = [0, 4]
memoryless = detection_universal(p, light_code, 2, DetectionMode.MEMORYLESS)
with_memory = detection_universal(p, light_code, 2, DetectionMode.WITH_MEMORY)
print(f"\n{{0,4}} on the 5-path, memoryless: universal={memoryless.universal},"
      f" stuck on {set(memoryless.unlocated)}")
print(f"{{0,4}} on the 5-path, with memory: universal={with_memory.universal}")
