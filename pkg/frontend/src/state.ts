export type ViewMode = "summary" | "original";
export type MethodName = "textrank" | "frequency";

export interface ViewState {
  mode: ViewMode;
  documentId: string | null;
  k: number;
  method: MethodName;
  fontScale: number;
  reading: boolean;
}

export const K_MIN = 1;
export const K_MAX = 10;
export const FONT_MIN = 0.8;
export const FONT_MAX = 1.8;

export function initialState(): ViewState {
  return {
    mode: "summary",
    documentId: null,
    k: 5,
    method: "textrank",
    fontScale: 1.0,
    reading: false,
  };
}

export function toggleMode(state: ViewState): ViewState {
  return { ...state, mode: state.mode === "summary" ? "original" : "summary" };
}

export function withDocument(state: ViewState, documentId: string): ViewState {
  return { ...state, documentId };
}

export function withK(state: ViewState, k: number): ViewState {
  return { ...state, k: clamp(Math.round(k), K_MIN, K_MAX) };
}

export function withMethod(state: ViewState, method: MethodName): ViewState {
  return { ...state, method };
}

export function withFontScale(state: ViewState, fontScale: number): ViewState {
  return { ...state, fontScale: clamp(fontScale, FONT_MIN, FONT_MAX) };
}

export function withReading(state: ViewState, reading: boolean): ViewState {
  return { ...state, reading };
}

function clamp(value: number, low: number, high: number): number {
  return Math.min(high, Math.max(low, value));
}
