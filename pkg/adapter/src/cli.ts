#!/usr/bin/env node
import { readFileSync, writeFileSync } from "node:fs";
import { parseArgs } from "node:util";

import { SUPPORTED_MODELS, TranscriptSchema, isSupportedModel } from "./schema.js";
import { stubTranscript } from "./stub.js";
import { transcribeWithModel } from "./whisper.js";

const USAGE =
  "usage: asr-adapter --model <name> --audio <wav> --reference <txt> --out <json> [--stub]";

export async function run(argv: string[]): Promise<number> {
  let args;
  try {
    args = parseArgs({
      args: argv,
      options: {
        model: { type: "string" },
        audio: { type: "string" },
        reference: { type: "string" },
        out: { type: "string" },
        stub: { type: "boolean", default: false },
      },
      allowPositionals: false,
    });
  } catch (e) {
    console.error(`${(e as Error).message}\n${USAGE}`);
    return 2;
  }
  const { model, audio, reference, out, stub } = args.values;
  if (!model || !audio || !reference || !out) {
    console.error(USAGE);
    return 2;
  }
  if (!isSupportedModel(model)) {
    console.error(
      `unsupported model '${model}' (expected one of: ${SUPPORTED_MODELS.join(", ")})`,
    );
    return 2;
  }

  let referenceText: string;
  try {
    referenceText = readFileSync(reference, "utf-8");
    // In stub mode the audio is not decoded, but it must still exist so the
    // invocation shape matches real runs.
    readFileSync(audio);
  } catch (e) {
    console.error((e as Error).message);
    return 2;
  }

  let transcript;
  try {
    transcript = stub
      ? stubTranscript(referenceText, audio, model)
      : await transcribeWithModel(audio, model);
  } catch (e) {
    console.error((e as Error).message);
    return 1;
  }

  const checked = TranscriptSchema.safeParse(transcript);
  if (!checked.success) {
    console.error(`transcript failed schema validation: ${checked.error.message}`);
    return 1;
  }
  writeFileSync(out, JSON.stringify(checked.data, null, 2) + "\n");
  return 0;
}

const entry = process.argv[1] ?? "";
if (entry.endsWith("cli.js") || entry.endsWith("asr-adapter")) {
  run(process.argv.slice(2)).then((code) => {
    process.exitCode = code;
  });
}
