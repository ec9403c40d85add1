export function extent(values) {
    let lo = Math.min(...values);
    let hi = Math.max(...values);
    if (hi - lo === 0) {
        return { lo: lo - 0.5, hi: hi + 0.5 };
    }
    const pad = 0.05 * (hi - lo);
    return { lo: lo - pad, hi: hi + pad };
}
export function xToPx(x, e, area) {
    return area.margin + ((x - e.lo) / (e.hi - e.lo)) * (area.width - 2 * area.margin);
}
export function yToPx(y, e, area) {
    return area.height - area.margin - ((y - e.lo) / (e.hi - e.lo)) * (area.height - 2 * area.margin);
}
export function ticks(e, count = 5) {
    const out = [];
    for (let i = 0; i < count; i++) {
        out.push(e.lo + ((e.hi - e.lo) * i) / (count - 1));
    }
    return out;
}
/**
 * Sector band edges in weight space: the y where df/df_seed crosses each
 * ratio bound. Presentation geometry for the background bands, mirroring
 * how the service draws its own SVG.
 */
export function bandEdges(d) {
    const base = Number(d.params.base);
    const logb = (v) => Math.log(v) / Math.log(base);
    return {
        yAB: logb(d.n_docs / (Number(d.params.alpha) * d.seed_df)),
        yBC: logb(d.n_docs / (Number(d.params.gamma) * d.seed_df)),
    };
}
