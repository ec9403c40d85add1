import { ChildProcess, spawn, spawnSync } from "node:child_process";
import { mkdtempSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { View } from "../src/controller.js";
import { DiagramPayload, TermSuggestion } from "../src/types.js";

const C6_TSV = [
  "d1\tA|B",
  "d2\tA|B|C",
  "d3\tA|C",
  "d4\tB|C",
  "d5\tA",
  "d6\tC|D",
  "",
].join("\n");

export interface RunningService {
  url: string;
  stop(): Promise<void>;
}

/** Build a C6 index and run the real Python service on an ephemeral port. */
export async function startC6Service(): Promise<RunningService> {
  const dir = mkdtempSync(join(tmpdir(), "pennant-ui-"));
  const corpus = join(dir, "c6.tsv");
  const index = join(dir, "c6.idx");
  writeFileSync(corpus, C6_TSV, "utf-8");
  const build = spawnSync("python3", ["-m", "pennant", "index", corpus, "-o", index]);
  if (build.status !== 0) {
    throw new Error(`index build failed: ${build.stderr}`);
  }
  const proc = spawn("python3", ["-m", "pennant", "serve", index, "--listen", "127.0.0.1:0"]);
  const url = await waitForUrl(proc);
  return {
    url,
    stop: () =>
      new Promise((resolve) => {
        proc.on("exit", () => resolve());
        proc.kill("SIGTERM");
      }),
  };
}

function waitForUrl(proc: ChildProcess, timeoutMs = 15000): Promise<string> {
  return new Promise((resolve, reject) => {
    let buffer = "";
    const timer = setTimeout(
      () => reject(new Error(`service never announced its address: ${buffer}`)),
      timeoutMs,
    );
    proc.stderr!.on("data", (chunk: Buffer) => {
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
export class RecordingView implements View {
  diagram: DiagramPayload | null = null;
  trail: string[] = [];
  canGoBack = false;
  suggestions: TermSuggestion[] = [];
  error: string | null = null;
  renderCount = 0;

  renderDiagram(diagram: DiagramPayload): void {
    this.diagram = diagram;
    this.renderCount += 1;
  }

  renderHistory(trail: readonly string[], canGoBack: boolean): void {
    this.trail = [...trail];
    this.canGoBack = canGoBack;
  }

  renderSuggestions(suggestions: TermSuggestion[]): void {
    this.suggestions = suggestions;
  }

  showError(message: string): void {
    this.error = message;
  }

  clearError(): void {
    this.error = null;
  }

  setBusy(_busy: boolean): void {}
}
