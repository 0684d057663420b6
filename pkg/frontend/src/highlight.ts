export type Span = readonly [number, number];

export interface MarkedRange {
  start: number;
  end: number;
}

/**
 * Build a fragment rendering `text` with each half-open [start, end) span
 * wrapped in a <mark class="highlight"> element. Spans must be ascending
 * and disjoint, which is what the highlights endpoint guarantees.
 */
export function renderHighlighted(text: string, spans: ReadonlyArray<Span>): DocumentFragment {
  const fragment = document.createDocumentFragment();
  let cursor = 0;
  for (const [start, end] of spans) {
    if (start < cursor || end > text.length || start >= end) {
      throw new Error(`invalid highlight span [${start}, ${end}) at cursor ${cursor}`);
    }
    if (start > cursor) {
      fragment.append(text.slice(cursor, start));
    }
    const mark = document.createElement("mark");
    mark.className = "highlight";
    mark.textContent = text.slice(start, end);
    fragment.append(mark);
    cursor = end;
  }
  fragment.append(text.slice(cursor));
  return fragment;
}

/**
 * Recover the character ranges covered by <mark> elements under `root`,
 * measured against its full text content. The inverse of renderHighlighted:
 * rendering spans and reading them back returns the same ranges.
 */
export function markedRanges(root: Node): MarkedRange[] {
  const ranges: MarkedRange[] = [];
  let offset = 0;

  const walk = (node: Node, current: MarkedRange | null): void => {
    if (node.nodeType === Node.TEXT_NODE) {
      const length = node.nodeValue?.length ?? 0;
      offset += length;
      if (current) {
        current.end = offset;
      }
      return;
    }
    let scope = current;
    if (node instanceof Element && node.tagName === "MARK") {
      scope = { start: offset, end: offset };
      ranges.push(scope);
    }
    for (const child of Array.from(node.childNodes)) {
      walk(child, scope);
    }
  };

  walk(root, null);
  return ranges.filter((range) => range.end > range.start);
}
