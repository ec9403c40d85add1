import { PennantApi } from "./api.js";
import { ExplorationController } from "./controller.js";
import { DomView } from "./dom.js";
import { QueryParams } from "./types.js";

/**
 * Page bootstrap. The service origin comes from the ?service= query
 * parameter, defaulting to port 8080 on the page's host; run the
 * service with --cors when the UI is served from another origin.
 */

function serviceUrl(): string {
  const fromQuery = new URLSearchParams(window.location.search).get("service");
  if (fromQuery) return fromQuery.replace(/\/$/, "");
  const host = window.location.hostname || "127.0.0.1";
  return `http://${host}:8080`;
}

function byId<T extends HTMLElement>(id: string): T {
  const element = document.getElementById(id);
  if (!element) throw new Error(`missing element #${id}`);
  return element as T;
}

function main(): void {
  const api = new PennantApi(serviceUrl());
  // view and controller reference each other; a late-bound handler
  // object breaks the cycle
  let controller: ExplorationController;
  const view = new DomView(
    {
      plot: byId("plot"),
      meta: byId("meta"),
      detail: byId("detail"),
      suggestions: byId("suggestions"),
      history: byId("history"),
      backButton: byId<HTMLButtonElement>("back"),
      banner: byId("banner"),
      busy: byId("busy"),
    },
    {
      onPointClick: (term) => void controller.clickPoint(term),
      onSuggestionPick: (term) => {
        byId<HTMLInputElement>("seed-input").value = term;
        view.renderSuggestions([]);
        void controller.selectSeed(term);
      },
      onHistoryPick: (seed) => void controller.selectSeed(seed),
    },
  );
  controller = new ExplorationController(api, view, readParams());

  byId("service-url").textContent = serviceUrl();

  const seedInput = byId<HTMLInputElement>("seed-input");
  let debounce: number | undefined;
  seedInput.addEventListener("input", () => {
    window.clearTimeout(debounce);
    debounce = window.setTimeout(() => void controller.searchSeeds(seedInput.value), 150);
  });
  seedInput.addEventListener("keydown", (event) => {
    if (event.key === "Enter" && seedInput.value) {
      view.renderSuggestions([]);
      void controller.selectSeed(seedInput.value);
    }
  });

  byId<HTMLButtonElement>("back").addEventListener("click", () => void controller.goBack());

  const paramsForm = byId<HTMLFormElement>("params");
  paramsForm.addEventListener("change", () => {
    void controller.setParams(readParams());
  });

  const bandsToggle = byId<HTMLInputElement>("bands");
  bandsToggle.addEventListener("change", () => {
    view.options = { ...view.options, showBands: bandsToggle.checked };
    if (controller.state.diagram) view.renderDiagram(controller.state.diagram);
  });
}

function readParams(): QueryParams {
  const num = (id: string, fallback: number) => {
    const raw = byId<HTMLInputElement>(id).value;
    const value = Number(raw);
    return raw !== "" && Number.isFinite(value) ? value : fallback;
  };
  const topKRaw = byId<HTMLInputElement>("top-k").value;
  return {
    minCo: num("min-co", 50),
    topK: topKRaw === "" ? null : Number(topKRaw),
    base: num("base", 10),
    alpha: num("alpha", 0.5),
    gamma: num("gamma", 5.0),
    tau: num("tau", 0.5),
  };
}

main();
