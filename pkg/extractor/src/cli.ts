#!/usr/bin/env node
/**
 * Capture CLI: loads a page in a headless browser, grows the window to the
 * page's scroll height, runs the extractor in the page, and prints the
 * snapshot JSON on stdout. Exit code 0 on success, 1 on any failure
 * (message on stderr), so it can serve as a renderer bridge command.
 */

import { pathToFileURL } from "url";
import { existsSync } from "fs";

import puppeteer from "puppeteer-core";

import { DEFAULT_MAX_ELEMENTS, DEFAULT_VIEWPORT_WIDTH, ExtractionConfig, extractSnapshot } from "./extract";

interface CliOptions {
  target: string;
  width: number;
  timeoutMs: number;
  maxElements: number;
  includeOffscreen: boolean;
  browserPath: string | undefined;
}

function usage(): string {
  return [
    "usage: renderscore-extract [options] <url-or-file>",
    "",
    "options:",
    `  --width <px>          capture viewport width (default ${DEFAULT_VIEWPORT_WIDTH})`,
    "  --timeout-ms <ms>     navigation timeout (default 30000)",
    `  --max-elements <n>    element cap (default ${DEFAULT_MAX_ELEMENTS})`,
    "  --include-offscreen   keep elements outside the page bounds",
    "  --browser-path <bin>  Chromium/Chrome executable (or set",
    "                        PUPPETEER_EXECUTABLE_PATH / CHROME_PATH)",
  ].join("\n");
}

export function parseArgs(argv: string[]): CliOptions {
  const options: CliOptions = {
    target: "",
    width: DEFAULT_VIEWPORT_WIDTH,
    timeoutMs: 30000,
    maxElements: DEFAULT_MAX_ELEMENTS,
    includeOffscreen: false,
    browserPath: process.env.PUPPETEER_EXECUTABLE_PATH || process.env.CHROME_PATH || undefined,
  };
  const positional: string[] = [];
  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i];
    const next = () => {
      i += 1;
      if (i >= argv.length) throw new Error(`missing value for ${arg}`);
      return argv[i];
    };
    if (arg === "--width") options.width = Number(next());
    else if (arg === "--timeout-ms") options.timeoutMs = Number(next());
    else if (arg === "--max-elements") options.maxElements = Number(next());
    else if (arg === "--include-offscreen") options.includeOffscreen = true;
    else if (arg === "--browser-path") options.browserPath = next();
    else if (arg === "--help" || arg === "-h") {
      process.stdout.write(usage() + "\n");
      process.exit(0);
    } else if (arg.startsWith("--")) throw new Error(`unknown option ${arg}`);
    else positional.push(arg);
  }
  if (positional.length !== 1) {
    throw new Error("expected exactly one url-or-file argument");
  }
  if (!(options.width > 0)) throw new Error("--width must be > 0");
  options.target = positional[0];
  return options;
}

export function resolveTarget(target: string): string {
  if (/^[a-z][a-z0-9+.-]*:\/\//i.test(target)) return target;
  if (!existsSync(target)) {
    throw new Error(`no such file: ${target}`);
  }
  return pathToFileURL(target).href;
}

async function capture(options: CliOptions): Promise<string> {
  if (!options.browserPath) {
    throw new Error(
      "no browser executable configured; pass --browser-path or set PUPPETEER_EXECUTABLE_PATH",
    );
  }
  const browser = await puppeteer.launch({
    executablePath: options.browserPath,
    headless: true,
    args: ["--no-sandbox", "--disable-gpu", "--hide-scrollbars"],
  });
  try {
    const page = await browser.newPage();
    await page.setViewport({ width: options.width, height: 1080 });
    await page.goto(resolveTarget(options.target), {
      waitUntil: "load",
      timeout: options.timeoutMs,
    });
    // grow the window to the full scroll height so nothing needs scrolling
    const scrollHeight = await page.evaluate(
      () => Math.max(document.documentElement.scrollHeight, document.body?.scrollHeight ?? 0, 1),
    );
    await page.setViewport({ width: options.width, height: Math.ceil(scrollHeight) });

    const config: ExtractionConfig = {
      viewportWidth: options.width,
      includeOffscreen: options.includeOffscreen,
      maxElements: options.maxElements,
    };
    return await page.evaluate(extractSnapshot, config);
  } finally {
    await browser.close();
  }
}

export async function main(argv: string[]): Promise<number> {
  let options: CliOptions;
  try {
    options = parseArgs(argv);
  } catch (error) {
    process.stderr.write(`error: ${(error as Error).message}\n\n${usage()}\n`);
    return 1;
  }
  try {
    const json = await capture(options);
    const parsed = JSON.parse(json);
    if (parsed && typeof parsed === "object" && "error" in parsed) {
      process.stderr.write(`error: extraction failed: ${parsed.error}\n`);
      return 1;
    }
    process.stdout.write(json + "\n");
    return 0;
  } catch (error) {
    process.stderr.write(`error: ${(error as Error).message}\n`);
    return 1;
  }
}

if (require.main === module) {
  main(process.argv.slice(2)).then((code) => {
    process.exitCode = code;
  });
}
