import { ApiClient, ApiError, HighlightPayload, SummaryPayload } from "./api.js";
import { renderHighlighted } from "./highlight.js";
import { SpeechReader } from "./speech.js";
import {
  FONT_MAX,
  FONT_MIN,
  K_MAX,
  K_MIN,
  MethodName,
  ViewState,
  initialState,
  toggleMode,
  withDocument,
  withFontScale,
  withK,
  withMethod,
  withReading,
} from "./state.js";

export interface AppHandle {
  root: HTMLElement;
  state(): ViewState;
  renderCount(): number;
  settled(): Promise<void>;
  refreshDocuments(): Promise<void>;
}

const SKELETON = `
  <header class="top">
    <h1>SummaryLens</h1>
    <p class="tagline">scan a page, skim the gist, hear it read</p>
  </header>
  <section class="ingest">
    <label class="button scan-label">Scan a page
      <input type="file" accept="image/*" capture="environment" id="scan-input" hidden>
    </label>
    <textarea id="paste-input" rows="3" placeholder="...or paste document text here"></textarea>
    <button id="paste-button" class="button">Add document</button>
  </section>
  <section class="library">
    <h2>Documents</h2>
    <ul id="document-list" class="document-list"></ul>
  </section>
  <section class="viewer" id="viewer" hidden>
    <div class="toolbar">
      <button id="mode-toggle" class="button">Show original</button>
      <label>Length
        <input type="range" id="k-slider" min="${K_MIN}" max="${K_MAX}" step="1" value="5">
        <span id="k-value">5</span>
      </label>
      <label>Method
        <select id="method-select">
          <option value="textrank">textrank</option>
          <option value="frequency">frequency</option>
        </select>
      </label>
      <label>Font
        <input type="range" id="font-slider" min="${FONT_MIN}" max="${FONT_MAX}" step="0.1" value="1">
      </label>
      <button id="read-button" class="button">Read aloud</button>
      <label>Speed
        <select id="rate-select">
          <option value="0.8">slow</option>
          <option value="1" selected>normal</option>
          <option value="1.25">brisk</option>
          <option value="1.5">fast</option>
        </select>
      </label>
    </div>
    <article id="view" class="view"></article>
    <p id="status" class="status"></p>
  </section>
`;

class App {
  private current: ViewState = initialState();
  private renders = 0;
  private inFlight: AbortController | null = null;
  private pending: Promise<void> | null = null;
  private displayedText = "";

  private readonly scanInput: HTMLInputElement;
  private readonly pasteInput: HTMLTextAreaElement;
  private readonly pasteButton: HTMLButtonElement;
  private readonly documentList: HTMLUListElement;
  private readonly viewer: HTMLElement;
  private readonly modeToggle: HTMLButtonElement;
  private readonly kSlider: HTMLInputElement;
  private readonly kValue: HTMLElement;
  private readonly methodSelect: HTMLSelectElement;
  private readonly fontSlider: HTMLInputElement;
  private readonly readButton: HTMLButtonElement;
  private readonly rateSelect: HTMLSelectElement;
  private readonly view: HTMLElement;
  private readonly status: HTMLElement;

  constructor(
    readonly root: HTMLElement,
    private readonly api: ApiClient,
    private readonly speech: SpeechReader,
  ) {
    root.innerHTML = SKELETON;
    this.scanInput = this.find("#scan-input");
    this.pasteInput = this.find("#paste-input");
    this.pasteButton = this.find("#paste-button");
    this.documentList = this.find("#document-list");
    this.viewer = this.find("#viewer");
    this.modeToggle = this.find("#mode-toggle");
    this.kSlider = this.find("#k-slider");
    this.kValue = this.find("#k-value");
    this.methodSelect = this.find("#method-select");
    this.fontSlider = this.find("#font-slider");
    this.readButton = this.find("#read-button");
    this.rateSelect = this.find("#rate-select");
    this.view = this.find("#view");
    this.status = this.find("#status");
    this.wire();
    if (!this.speech.available) {
      this.readButton.disabled = true;
      this.readButton.title = "speech synthesis is not available in this browser";
    }
  }

  private find<T extends Element>(selector: string): T {
    const element = this.root.querySelector(selector);
    if (!element) {
      throw new Error(`missing element ${selector}`);
    }
    return element as T;
  }

  private wire(): void {
    this.scanInput.addEventListener("change", () => {
      const file = this.scanInput.files?.[0];
      if (file) {
        this.track(this.ingestScan(file));
      }
    });
    this.pasteButton.addEventListener("click", () => {
      const text = this.pasteInput.value;
      if (text.trim()) {
        this.track(this.ingestPaste(text));
      }
    });
    this.modeToggle.addEventListener("click", () => {
      this.current = toggleMode(this.current);
      this.modeToggle.textContent =
        this.current.mode === "summary" ? "Show original" : "Show summary";
      this.track(this.fetchView());
    });
    this.kSlider.addEventListener("input", () => {
      this.kValue.textContent = this.kSlider.value;
    });
    this.kSlider.addEventListener("change", () => {
      this.current = withK(this.current, Number(this.kSlider.value));
      this.kValue.textContent = String(this.current.k);
      this.track(this.fetchView());
    });
    this.methodSelect.addEventListener("change", () => {
      this.current = withMethod(this.current, this.methodSelect.value as MethodName);
      this.track(this.fetchView());
    });
    this.fontSlider.addEventListener("input", () => {
      this.current = withFontScale(this.current, Number(this.fontSlider.value));
      this.view.style.fontSize = `${this.current.fontScale}rem`;
    });
    this.readButton.addEventListener("click", () => {
      this.speech.rate = Number(this.rateSelect.value);
      this.speech.toggle(this.displayedText);
    });
    this.speech.onchange = (reading) => {
      this.current = withReading(this.current, reading);
      this.readButton.textContent = reading ? "Stop reading" : "Read aloud";
    };
  }

  state(): ViewState {
    return this.current;
  }

  renderCount(): number {
    return this.renders;
  }

  async settled(): Promise<void> {
    // track() never lets pending reject, and the chain clears itself.
    while (this.pending) {
      await this.pending;
    }
  }

  track(work: Promise<void>): void {
    const previous = this.pending ?? Promise.resolve();
    const next: Promise<void> = previous
      .then(() => work)
      .catch((error: unknown) => {
        this.showError(error);
      })
      .then(() => {
        if (this.pending === next) {
          this.pending = null;
        }
      });
    this.pending = next;
  }

  async refreshDocuments(): Promise<void> {
    const documents = await this.api.listDocuments();
    this.documentList.textContent = "";
    for (const info of documents) {
      const item = document.createElement("li");
      const button = document.createElement("button");
      button.className = "document-entry";
      button.dataset.id = info.id;
      button.textContent = info.preview || info.id;
      if (info.id === this.current.documentId) {
        button.classList.add("active");
      }
      button.addEventListener("click", () => {
        this.track(this.selectDocument(info.id));
      });
      item.append(button);
      this.documentList.append(item);
    }
  }

  private async ingestScan(file: File): Promise<void> {
    this.status.textContent = "scanning...";
    const result = await this.api.scan(file);
    this.scanInput.value = "";
    await this.refreshDocuments();
    await this.selectDocument(result.document_id);
  }

  private async ingestPaste(text: string): Promise<void> {
    const result = await this.api.pasteText(text);
    this.pasteInput.value = "";
    await this.refreshDocuments();
    await this.selectDocument(result.document_id);
  }

  private async selectDocument(id: string): Promise<void> {
    this.current = withDocument(this.current, id);
    for (const entry of Array.from(this.documentList.querySelectorAll(".document-entry"))) {
      entry.classList.toggle("active", (entry as HTMLElement).dataset.id === id);
    }
    this.viewer.hidden = false;
    await this.fetchView();
  }

  private async fetchView(): Promise<void> {
    const id = this.current.documentId;
    if (!id) {
      return;
    }
    this.inFlight?.abort();
    const controller = new AbortController();
    this.inFlight = controller;
    const params = { k: this.current.k, method: this.current.method };
    try {
      if (this.current.mode === "summary") {
        const summary = await this.api.getSummary(id, params, controller.signal);
        this.renderSummary(summary);
      } else {
        const marked = await this.api.getHighlights(id, params, controller.signal);
        this.renderOriginal(marked);
      }
    } catch (error) {
      if (isAbort(error)) {
        return;
      }
      throw error;
    } finally {
      if (this.inFlight === controller) {
        this.inFlight = null;
      }
    }
  }

  private renderSummary(summary: SummaryPayload): void {
    this.view.textContent = "";
    for (const sentence of summary.sentences) {
      const paragraph = document.createElement("p");
      paragraph.className = "sentence";
      paragraph.textContent = sentence;
      this.view.append(paragraph);
    }
    this.displayedText = summary.sentences.join(" ");
    const total = summary.scores.length;
    let note = `${summary.sentences.length} of ${total} sentences · ${summary.method}`;
    if (!summary.converged) {
      note += " · ranking stopped early";
    }
    this.status.textContent = note;
    this.renders += 1;
  }

  private renderOriginal(marked: HighlightPayload): void {
    this.view.textContent = "";
    this.view.append(renderHighlighted(marked.text, marked.highlight_spans));
    this.displayedText = marked.text;
    this.status.textContent = `${marked.highlight_spans.length} highlighted sentences`;
    this.renders += 1;
  }

  private showError(error: unknown): void {
    if (error instanceof ApiError) {
      this.status.textContent = `error: ${error.message}`;
    } else if (error instanceof Error) {
      this.status.textContent = `error: ${error.message}`;
    } else {
      this.status.textContent = "error: something went wrong";
    }
  }
}

function isAbort(error: unknown): boolean {
  return error instanceof DOMException && error.name === "AbortError";
}

export function initApp(root: HTMLElement, api: ApiClient, speech: SpeechReader): AppHandle {
  const app = new App(root, api, speech);
  app.track(app.refreshDocuments());
  return {
    root,
    state: () => app.state(),
    renderCount: () => app.renderCount(),
    settled: () => app.settled(),
    refreshDocuments: () => app.refreshDocuments(),
  };
}
