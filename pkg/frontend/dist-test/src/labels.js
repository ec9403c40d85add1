"use strict";
/**
 * Greedy label de-overlap. The service's SVG draws labels at fixed
 * offsets and accepts collisions; in the browser we nudge labels apart
 * vertically so dense pennants stay readable.
 */
Object.defineProperty(exports, "__esModule", { value: true });
exports.layoutLabels = layoutLabels;
function overlaps(a, b) {
    return (a.x > b.x - b.width &&
        b.x > a.x - a.width &&
        Math.abs(a.y - b.y) < (a.height + b.height) / 2);
}
/**
 * Returns adjusted y positions, same order as the input. Labels are
 * processed top-to-bottom; each one moves down just far enough to clear
 * everything already placed.
 */
function layoutLabels(boxes) {
    const order = boxes.map((_, i) => i).sort((a, b) => boxes[a].y - boxes[b].y);
    const placed = [];
    const result = boxes.map((b) => b.y);
    for (const i of order) {
        const box = { ...boxes[i] };
        let moved = true;
        while (moved) {
            moved = false;
            for (const other of placed) {
                if (overlaps(box, other)) {
                    box.y = other.y + (other.height + box.height) / 2 + 1;
                    moved = true;
                }
            }
        }
        placed.push(box);
        result[i] = box.y;
    }
    return result;
}
