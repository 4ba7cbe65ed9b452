import { z } from "zod";

export const TimedWordSchema = z
  .object({
    word: z.string(),
    start: z.number().min(0),
    end: z.number().min(0),
  })
  .strict();

export const TranscriptSchema = z
  .object({
    audio_id: z.string(),
    source: z.string(),
    words: z.array(TimedWordSchema),
  })
  .strict()
  .superRefine((t, ctx) => {
    let prev = -Infinity;
    for (const [i, w] of t.words.entries()) {
      if (w.end < w.start) {
        ctx.addIssue({
          code: z.ZodIssueCode.custom,
          message: `word ${i} has end < start`,
        });
      }
      if (w.start < prev) {
        ctx.addIssue({
          code: z.ZodIssueCode.custom,
          message: `word ${i} breaks start-time ordering`,
        });
      }
      prev = w.start;
    }
  });

export type TimedWord = z.infer<typeof TimedWordSchema>;
export type Transcript = z.infer<typeof TranscriptSchema>;

export const SUPPORTED_MODELS = [
  "tiny",
  "base",
  "small",
  "medium",
  "large",
  "turbo",
] as const;

export function isSupportedModel(name: string): boolean {
  return (SUPPORTED_MODELS as readonly string[]).includes(name);
}
