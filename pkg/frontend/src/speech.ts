export interface SynthLike {
  speak(utterance: SpeechSynthesisUtterance): void;
  cancel(): void;
}

export type UtteranceFactory = (text: string) => SpeechSynthesisUtterance;

function browserSynth(): SynthLike | null {
  if (typeof window !== "undefined" && "speechSynthesis" in window) {
    return window.speechSynthesis;
  }
  return null;
}

/**
 * Strict-toggle reader over the browser's speech synthesis: one press
 * starts reading the given text, the next press cancels it. `reading`
 * also drops back to false on its own when the utterance finishes.
 */
export class SpeechReader {
  rate = 1.0;
  onchange: ((reading: boolean) => void) | null = null;

  private active: SpeechSynthesisUtterance | null = null;
  private readonly synth: SynthLike | null;
  private readonly makeUtterance: UtteranceFactory;

  constructor(synth?: SynthLike | null, makeUtterance?: UtteranceFactory) {
    this.synth = synth === undefined ? browserSynth() : synth;
    this.makeUtterance = makeUtterance ?? ((text) => new SpeechSynthesisUtterance(text));
  }

  get available(): boolean {
    return this.synth !== null;
  }

  get reading(): boolean {
    return this.active !== null;
  }

  /** Start or cancel reading; returns the reading state after the press. */
  toggle(text: string): boolean {
    if (!this.synth) {
      return false;
    }
    if (this.active) {
      this.stop();
      return false;
    }
    const content = text.trim();
    if (!content) {
      return false;
    }
    const utterance = this.makeUtterance(content);
    utterance.rate = this.rate;
    const finished = () => {
      // A cancelled utterance can still fire events; only the current
      // one may flip the state back.
      if (this.active === utterance) {
        this.active = null;
        this.notify();
      }
    };
    utterance.onend = finished;
    utterance.onerror = finished;
    this.active = utterance;
    this.synth.cancel();
    this.synth.speak(utterance);
    this.notify();
    return true;
  }

  stop(): void {
    if (!this.synth || !this.active) {
      return;
    }
    this.active = null;
    this.synth.cancel();
    this.notify();
  }

  private notify(): void {
    if (this.onchange) {
      this.onchange(this.reading);
    }
  }
}
