import { basename, extname } from "node:path";

import type { Transcript } from "./schema.js";

const WORD_DURATION_S = 0.4;
const WORD_SPACING_S = 0.5;

/**
 * Deterministic transcript built from the reference text: one hypothesis
 * word per reference word on a fixed time grid. No model is loaded.
 */
export function stubTranscript(
  referenceText: string,
  audioPath: string,
  modelName: string,
): Transcript {
  const words = referenceText
    .split(/\s+/)
    .filter((w) => w.length > 0)
    .map((word, i) => ({
      word,
      start: i * WORD_SPACING_S,
      end: i * WORD_SPACING_S + WORD_DURATION_S,
    }));
  return {
    audio_id: basename(audioPath, extname(audioPath)),
    source: modelName,
    words,
  };
}
