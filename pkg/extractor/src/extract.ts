/**
 * DOM snapshot extraction: walks a rendered document and emits the visible
 * elements as snapshot JSON (geometry in page coordinates, computed styles,
 * own text) for the renderscore engine.
 *
 * `extractSnapshot` is deliberately self-contained (all helpers are inner
 * functions, no outer-scope references) so a browser driver can inject it
 * verbatim with `page.evaluate(extractSnapshot, config)`.
 */

export interface ExtractionConfig {
  /** Capture viewport width in CSS pixels; used by the CLI when loading. */
  viewportWidth?: number;
  /** Keep elements whose boxes fall entirely outside the page bounds. */
  includeOffscreen?: boolean;
  /** Hard cap on emitted elements; sets `truncated` when hit. */
  maxElements?: number;
}

/** The subset of `window` the extractor reads; tests supply a stub. */
export interface WindowLike {
  getComputedStyle(element: Element): CSSStyleDeclaration;
  scrollX?: number;
  scrollY?: number;
  innerWidth?: number;
  innerHeight?: number;
}

export const DEFAULT_VIEWPORT_WIDTH = 1920;
export const DEFAULT_MAX_ELEMENTS = 50000;

/**
 * Extract every visible element of the document into snapshot JSON.
 *
 * Visibility: computed display != none, visibility != hidden, opacity > 0,
 * positive box area, and (unless includeOffscreen) the box intersects the
 * page bounds. Boxes come from bounding client rects shifted by the scroll
 * offset into page coordinates. Text is the element's own text nodes only,
 * whitespace-normalized. Parent links point at the nearest emitted
 * ancestor. Returns `{"error": ...}` JSON if the DOM walk throws.
 */
export function extractSnapshot(
  config?: ExtractionConfig,
  doc: Document = document,
  win: WindowLike = window,
): string {
  try {
    const includeOffscreen = config?.includeOffscreen ?? false;
    const maxElements = config?.maxElements ?? 50000;

    const scrollX = win.scrollX ?? 0;
    const scrollY = win.scrollY ?? 0;
    const pageWidth = Math.max(
      doc.documentElement?.clientWidth ?? 0,
      win.innerWidth ?? 0,
      1,
    );
    const pageHeight = Math.max(
      doc.documentElement?.scrollHeight ?? 0,
      win.innerHeight ?? 0,
      1,
    );

    function normalizeText(raw: string): string {
      return raw.replace(/\s+/g, " ").trim();
    }

    function ownText(element: Element): string {
      let text = "";
      for (const node of Array.from(element.childNodes)) {
        if (node.nodeType === 3 /* TEXT_NODE */) {
          text += node.textContent ?? "";
        }
      }
      return normalizeText(text);
    }

    function parseChannels(value: string): number[] {
      const match = value.match(/rgba?\(([^)]*)\)/);
      if (!match) return [];
      return match[1].split(",").map((part) => parseFloat(part.trim()));
    }

    function parseColor(value: string): [number, number, number] {
      const channels = parseChannels(value);
      if (channels.length < 3) return [0, 0, 0];
      return [Math.round(channels[0]), Math.round(channels[1]), Math.round(channels[2])];
    }

    function parseBackground(value: string): [number, number, number, number] {
      const channels = parseChannels(value);
      if (channels.length < 3) return [0, 0, 0, 0];
      const alpha = channels.length >= 4 ? channels[3] : 1;
      return [
        Math.round(channels[0]),
        Math.round(channels[1]),
        Math.round(channels[2]),
        Math.max(0, Math.min(1, alpha)),
      ];
    }

    interface ElementRecord {
      index: number;
      parent: number | null;
      tag: string;
      classes: string[];
      text: string;
      box: { left: number; top: number; width: number; height: number };
      styles: {
        color: [number, number, number];
        backgroundColor: [number, number, number, number];
        fontSize: number;
        borderRadius: number;
        position: string;
        fontEmpty: boolean;
      };
      visible: true;
    }

    const records: ElementRecord[] = [];
    // element -> emitted index, for parent resolution through filtered nodes
    const indexOf = new Map<Element, number>();
    let truncated = false;

    const root = doc.body;
    const stack: Element[] = [];
    if (root) {
      for (let i = root.children.length - 1; i >= 0; i--) {
        stack.push(root.children[i]);
      }
    }

    while (stack.length > 0) {
      const element = stack.pop() as Element;
      for (let i = element.children.length - 1; i >= 0; i--) {
        stack.push(element.children[i]);
      }

      const style = win.getComputedStyle(element);
      if (style.getPropertyValue("display") === "none") continue;
      if (style.getPropertyValue("visibility") === "hidden") continue;
      const opacity = parseFloat(style.getPropertyValue("opacity") || "1");
      if (!(opacity > 0)) continue;

      const rect = element.getBoundingClientRect();
      if (!(rect.width > 0 && rect.height > 0)) continue;

      const left = rect.left + scrollX;
      const top = rect.top + scrollY;
      if (!includeOffscreen) {
        const onPage =
          left < pageWidth && top < pageHeight && left + rect.width > 0 && top + rect.height > 0;
        if (!onPage) continue;
      }

      if (records.length >= maxElements) {
        truncated = true;
        break;
      }

      let ancestor = element.parentElement;
      let parent: number | null = null;
      while (ancestor) {
        const seen = indexOf.get(ancestor);
        if (seen !== undefined) {
          parent = seen;
          break;
        }
        ancestor = ancestor.parentElement;
      }

      const index = records.length;
      indexOf.set(element, index);
      records.push({
        index,
        parent,
        tag: element.tagName.toLowerCase(),
        classes: Array.from(element.classList),
        text: ownText(element),
        box: { left, top, width: rect.width, height: rect.height },
        styles: {
          color: parseColor(style.getPropertyValue("color")),
          backgroundColor: parseBackground(style.getPropertyValue("background-color")),
          fontSize: parseFloat(style.getPropertyValue("font-size")) || 0,
          borderRadius: parseFloat(style.getPropertyValue("border-top-left-radius")) || 0,
          position: style.getPropertyValue("position") || "static",
          fontEmpty: style.getPropertyValue("font-family") === "",
        },
        visible: true,
      });
    }

    const snapshot: Record<string, unknown> = {
      page: {
        width: pageWidth,
        height: pageHeight,
        url: doc.location ? doc.location.href : undefined,
      },
      elements: records,
    };
    if (truncated) {
      snapshot.truncated = true;
    }
    return JSON.stringify(snapshot);
  } catch (error) {
    return JSON.stringify({ error: String(error) });
  }
}
