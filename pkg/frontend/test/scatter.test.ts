import assert from "node:assert/strict";
import { test } from "node:test";

import { layoutLabels } from "../src/labels.js";
import { buildScatterScene, findAll, SceneNode } from "../src/scatter.js";
import { C6_SEED_A, THREE_BANDS } from "./fixture.js";

function markers(scene: SceneNode) {
  return findAll(scene, (n) => n.attrs.class === "marker");
}

function textOf(scene: SceneNode, cls: string): string[] {
  return findAll(scene, (n) => n.tag === "text" && n.attrs.class === cls).map((n) => n.text ?? "");
}

test("one marker per payload point plus a distinct seed marker", () => {
  const scene = buildScatterScene(C6_SEED_A);
  assert.equal(markers(scene).length, C6_SEED_A.points.length);
  assert.equal(findAll(scene, (n) => n.attrs.class === "seed-marker").length, 1);
});

test("seed marker sits at the right-hand tip", () => {
  for (const payload of [C6_SEED_A, THREE_BANDS]) {
    const scene = buildScatterScene(payload);
    const seedX = Number(findAll(scene, (n) => n.attrs.class === "seed-marker")[0].attrs.cx);
    for (const marker of markers(scene)) {
      assert.ok(seedX >= Number(marker.attrs.cx));
    }
  }
});

test("pixel order follows weight order (y inverted)", () => {
  const scene = buildScatterScene(THREE_BANDS);
  const groups = findAll(scene, (n) => n.attrs["data-term"] !== undefined);
  const byTerm = new Map(
    groups.map((g) => {
      const marker = findAll(g, (n) => n.attrs.class === "marker")[0];
      return [g.attrs["data-term"], { cx: Number(marker.attrs.cx), cy: Number(marker.attrs.cy) }];
    }),
  );
  const points = THREE_BANDS.points;
  for (const a of points) {
    for (const b of points) {
      const pa = byTerm.get(a.term)!;
      const pb = byTerm.get(b.term)!;
      if (Number(a.x) < Number(b.x)) assert.ok(pa.cx < pb.cx);
      if (Number(a.y) < Number(b.y)) assert.ok(pa.cy > pb.cy);
    }
  }
});

test("displayed values are the payload strings verbatim", () => {
  const scene = buildScatterScene(C6_SEED_A);
  const labels = textOf(scene, "label");
  assert.deepEqual(labels, ["B", "C"]);
  const titles = findAll(scene, (n) => n.tag === "title").map((n) => n.text ?? "");
  const pointB = titles.find((t) => t.startsWith("B "));
  assert.ok(pointB);
  assert.match(pointB!, /x=1\.301030/); // the wire string, not a reformatted number
  assert.match(pointB!, /y=0\.301030/);
  assert.match(pointB!, /co=2 df=3/);
});

test("dominant points get a ring, others do not", () => {
  const withDominant = buildScatterScene(THREE_BANDS);
  const rings = findAll(withDominant, (n) => n.attrs.class === "ring");
  assert.equal(rings.length, 1);
  const none = buildScatterScene(C6_SEED_A);
  assert.equal(findAll(none, (n) => n.attrs.class === "ring").length, 0);
});

test("sector bands render when visible and toggle off", () => {
  const bands = (scene: SceneNode) =>
    findAll(scene, (n) => (n.attrs.class ?? "").startsWith("band band-"));
  assert.equal(bands(buildScatterScene(THREE_BANDS)).length, 3);
  // C6 seed A: both ratio boundaries fall outside the data extent, so
  // only the middle band survives clamping
  assert.equal(bands(buildScatterScene(C6_SEED_A)).length, 1);
  const off = buildScatterScene(THREE_BANDS, {
    width: 940,
    height: 560,
    margin: 56,
    showBands: false,
    fontSize: 12,
    labelMaxChars: 32,
  });
  assert.equal(bands(off).length, 0);
});

test("long labels are elided with an ellipsis", () => {
  const payload = {
    ...C6_SEED_A,
    points: [
      { ...C6_SEED_A.points[0], term: "An Unreasonably Long Descriptor Name For Testing" },
    ],
  };
  const scene = buildScatterScene(payload, {
    width: 940,
    height: 560,
    margin: 56,
    showBands: true,
    fontSize: 12,
    labelMaxChars: 12,
  });
  assert.deepEqual(textOf(scene, "label"), ["An Unreason…"]);
});

test("coincident labels are nudged apart", () => {
  const payload = {
    ...C6_SEED_A,
    points: [
      { ...C6_SEED_A.points[0], term: "First" },
      { ...C6_SEED_A.points[0], term: "Second" },
      { ...C6_SEED_A.points[0], term: "Third" },
    ],
  };
  const scene = buildScatterScene(payload);
  const ys = findAll(scene, (n) => n.attrs.class === "label").map((n) => Number(n.attrs.y));
  const sorted = [...ys].sort((a, b) => a - b);
  for (let i = 1; i < sorted.length; i++) {
    assert.ok(sorted[i] - sorted[i - 1] >= 12, `labels too close: ${sorted}`);
  }
});

test("layoutLabels resolves a stacked collision", () => {
  const boxes = [
    { x: 100, y: 50, width: 60, height: 12 },
    { x: 100, y: 52, width: 60, height: 12 },
    { x: 100, y: 54, width: 60, height: 12 },
  ];
  const ys = layoutLabels(boxes);
  const sorted = [...ys].sort((a, b) => a - b);
  for (let i = 1; i < sorted.length; i++) {
    assert.ok(sorted[i] - sorted[i - 1] >= 12);
  }
});

test("layoutLabels leaves distant labels alone", () => {
  const boxes = [
    { x: 100, y: 50, width: 60, height: 12 },
    { x: 100, y: 300, width: 60, height: 12 },
    { x: 400, y: 50, width: 60, height: 12 },
  ];
  assert.deepEqual(layoutLabels(boxes), [50, 300, 50]);
});
