"use strict";
Object.defineProperty(exports, "__esModule", { value: true });
exports.RecordingView = void 0;
exports.startC6Service = startC6Service;
const node_child_process_1 = require("node:child_process");
const node_fs_1 = require("node:fs");
const node_os_1 = require("node:os");
const node_path_1 = require("node:path");
const C6_TSV = [
    "d1\tA|B",
    "d2\tA|B|C",
    "d3\tA|C",
    "d4\tB|C",
    "d5\tA",
    "d6\tC|D",
    "",
].join("\n");
/** Build a C6 index and run the real Python service on an ephemeral port. */
async function startC6Service() {
    const dir = (0, node_fs_1.mkdtempSync)((0, node_path_1.join)((0, node_os_1.tmpdir)(), "pennant-ui-"));
    const corpus = (0, node_path_1.join)(dir, "c6.tsv");
    const index = (0, node_path_1.join)(dir, "c6.idx");
    (0, node_fs_1.writeFileSync)(corpus, C6_TSV, "utf-8");
    const build = (0, node_child_process_1.spawnSync)("python3", ["-m", "pennant", "index", corpus, "-o", index]);
    if (build.status !== 0) {
        throw new Error(`index build failed: ${build.stderr}`);
    }
    const proc = (0, node_child_process_1.spawn)("python3", ["-m", "pennant", "serve", index, "--listen", "127.0.0.1:0"]);
    const url = await waitForUrl(proc);
    return {
        url,
        stop: () => new Promise((resolve) => {
            proc.on("exit", () => resolve());
            proc.kill("SIGTERM");
        }),
    };
}
function waitForUrl(proc, timeoutMs = 15000) {
    return new Promise((resolve, reject) => {
        let buffer = "";
        const timer = setTimeout(() => reject(new Error(`service never announced its address: ${buffer}`)), timeoutMs);
        proc.stderr.on("data", (chunk) => {
            buffer += chunk.toString();
            const match = buffer.match(/http:\/\/([\d.]+):(\d+)/);
            if (match) {
                clearTimeout(timer);
                resolve(match[0]);
            }
        });
        proc.on("exit", (code) => {
            clearTimeout(timer);
            reject(new Error(`service exited early (${code}): ${buffer}`));
        });
    });
}
/** View double that records everything the controller pushes at it. */
class RecordingView {
    constructor() {
        this.diagram = null;
        this.trail = [];
        this.canGoBack = false;
        this.suggestions = [];
        this.error = null;
        this.renderCount = 0;
    }
    renderDiagram(diagram) {
        this.diagram = diagram;
        this.renderCount += 1;
    }
    renderHistory(trail, canGoBack) {
        this.trail = [...trail];
        this.canGoBack = canGoBack;
    }
    renderSuggestions(suggestions) {
        this.suggestions = suggestions;
    }
    showError(message) {
        this.error = message;
    }
    clearError() {
        this.error = null;
    }
    setBusy(_busy) { }
}
exports.RecordingView = RecordingView;
