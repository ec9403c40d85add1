"use strict";
Object.defineProperty(exports, "__esModule", { value: true });
exports.SECTOR_COLOR = exports.DEFAULT_OPTIONS = void 0;
exports.buildScatterScene = buildScatterScene;
exports.findAll = findAll;
const geometry_js_1 = require("./geometry.js");
const labels_js_1 = require("./labels.js");
exports.DEFAULT_OPTIONS = {
    width: 940,
    height: 560,
    margin: 56,
    showBands: true,
    fontSize: 12,
    labelMaxChars: 32,
};
exports.SECTOR_COLOR = {
    A: "#2e7d32",
    B: "#1f5fa8",
    C: "#b3422e",
};
const BAND_FILL = {
    A: "#e9f1e9",
    B: "#f7f7f1",
    C: "#f4eaea",
};
const SEED_COLOR = "#111111";
function el(tag, attrs, children, text) {
    return { tag, attrs, children, text };
}
function elide(label, maxChars) {
    return label.length <= maxChars ? label : label.slice(0, maxChars - 1) + "…";
}
function buildScatterScene(diagram, options = exports.DEFAULT_OPTIONS) {
    const { width, height, margin, fontSize } = options;
    const area = { width, height, margin };
    const xs = diagram.points.map((p) => Number(p.x)).concat([Number(diagram.seed_x)]);
    const ys = diagram.points.map((p) => Number(p.y)).concat([Number(diagram.seed_y)]);
    const ex = (0, geometry_js_1.extent)(xs);
    const ey = (0, geometry_js_1.extent)(ys);
    const px = (v) => (0, geometry_js_1.xToPx)(v, ex, area);
    const py = (v) => (0, geometry_js_1.yToPx)(v, ey, area);
    const children = [
        el("rect", { width: String(width), height: String(height), fill: "#ffffff" }),
    ];
    if (options.showBands) {
        const { yAB, yBC } = (0, geometry_js_1.bandEdges)(diagram);
        const bands = [
            ["A", Math.max(yAB, ey.lo), ey.hi],
            ["B", Math.max(yBC, ey.lo), Math.min(yAB, ey.hi)],
            ["C", ey.lo, Math.min(yBC, ey.hi)],
        ];
        for (const [name, lo, hi] of bands) {
            if (hi <= lo)
                continue;
            children.push(el("rect", {
                class: `band band-${name}`,
                x: String(margin),
                y: py(hi).toFixed(2),
                width: String(width - 2 * margin),
                height: (py(lo) - py(hi)).toFixed(2),
                fill: BAND_FILL[name],
            }), el("text", {
                class: "band-label",
                x: String(width - margin - 6),
                y: (py(hi) + fontSize + 4).toFixed(2),
                "text-anchor": "end",
                fill: "#999999",
            }, undefined, name));
        }
    }
    children.push(el("rect", {
        class: "frame",
        x: String(margin),
        y: String(margin),
        width: String(width - 2 * margin),
        height: String(height - 2 * margin),
        fill: "none",
        stroke: "#444444",
    }));
    for (const tx of (0, geometry_js_1.ticks)(ex)) {
        children.push(el("text", {
            class: "tick",
            x: px(tx).toFixed(2),
            y: String(height - margin + fontSize + 6),
            "text-anchor": "middle",
            fill: "#333333",
        }, undefined, tx.toFixed(3)));
    }
    for (const ty of (0, geometry_js_1.ticks)(ey)) {
        children.push(el("text", {
            class: "tick",
            x: String(margin - 6),
            y: (py(ty) + fontSize * 0.35).toFixed(2),
            "text-anchor": "end",
            fill: "#333333",
        }, undefined, ty.toFixed(3)));
    }
    // labels first compute their collision boxes, then get nudged apart
    const labelBoxes = diagram.points.map((p) => ({
        x: px(Number(p.x)) - 6,
        y: py(Number(p.y)) + fontSize * 0.35,
        width: Math.min(p.term.length, options.labelMaxChars) * fontSize * 0.6,
        height: fontSize + 2,
    }));
    const labelYs = (0, labels_js_1.layoutLabels)(labelBoxes);
    diagram.points.forEach((p, i) => {
        const cx = px(Number(p.x));
        const cy = py(Number(p.y));
        const color = exports.SECTOR_COLOR[p.sector];
        const pointChildren = [
            el("title", {}, undefined, `${p.term} · co=${p.co_count} df=${p.df} · x=${p.x} y=${p.y} · sector ${p.sector}` +
                (p.dominant ? " · dominant" : "")),
        ];
        if (p.dominant) {
            pointChildren.push(el("circle", {
                class: "ring",
                cx: cx.toFixed(2),
                cy: cy.toFixed(2),
                r: "8",
                fill: "none",
                stroke: color,
                "stroke-width": "1.5",
            }));
        }
        pointChildren.push(el("circle", {
            class: "marker",
            cx: cx.toFixed(2),
            cy: cy.toFixed(2),
            r: "4",
            fill: color,
        }), el("text", {
            class: "label",
            x: (cx - 6).toFixed(2),
            y: labelYs[i].toFixed(2),
            "text-anchor": "end",
            fill: color,
        }, undefined, elide(p.term, options.labelMaxChars)));
        children.push(el("g", { class: "pt", "data-term": p.term }, pointChildren));
    });
    const sx = px(Number(diagram.seed_x));
    const sy = py(Number(diagram.seed_y));
    children.push(el("g", { class: "seed" }, [
        el("title", {}, undefined, `${diagram.seed} · df=${diagram.seed_df} · seed`),
        el("circle", {
            class: "seed-ring",
            cx: sx.toFixed(2),
            cy: sy.toFixed(2),
            r: "9",
            fill: "none",
            stroke: SEED_COLOR,
            "stroke-width": "1.5",
        }),
        el("circle", {
            class: "seed-marker",
            cx: sx.toFixed(2),
            cy: sy.toFixed(2),
            r: "5",
            fill: SEED_COLOR,
        }),
        el("text", {
            class: "seed-label",
            x: (sx - 12).toFixed(2),
            y: (sy + fontSize * 0.35).toFixed(2),
            "text-anchor": "end",
            "font-weight": "bold",
            fill: SEED_COLOR,
        }, undefined, elide(diagram.seed, options.labelMaxChars)),
    ]));
    return el("svg", {
        xmlns: "http://www.w3.org/2000/svg",
        width: String(width),
        height: String(height),
        viewBox: `0 0 ${width} ${height}`,
        "font-size": String(fontSize),
    }, children);
}
/** Depth-first search helpers used by tests and the DOM layer. */
function findAll(node, predicate) {
    const out = [];
    const walk = (n) => {
        if (predicate(n))
            out.push(n);
        (n.children ?? []).forEach(walk);
    };
    walk(node);
    return out;
}
