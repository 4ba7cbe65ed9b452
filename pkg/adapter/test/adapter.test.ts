import { execFileSync, spawnSync } from "node:child_process";
import { existsSync, mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join, resolve } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { TranscriptSchema } from "../src/schema.js";
import { stubTranscript } from "../src/stub.js";

const CLI = resolve(__dirname, "..", "dist", "cli.js");
const SCHEMA = resolve(__dirname, "..", "..", "docs", "schemas", "transcript.schema.json");
const REFERENCE_TEXT =
  "When the sunlight strikes raindrops in the air, they act as a prism and form a rainbow.";

let dir: string;
let wavPath: string;
let refPath: string;

function silentWav(seconds: number, rate = 16000): Buffer {
  const samples = seconds * rate;
  const data = Buffer.alloc(samples * 2);
  const header = Buffer.alloc(44);
  header.write("RIFF", 0);
  header.writeUInt32LE(36 + data.length, 4);
  header.write("WAVEfmt ", 8);
  header.writeUInt32LE(16, 16);
  header.writeUInt16LE(1, 20); // PCM
  header.writeUInt16LE(1, 22); // mono
  header.writeUInt32LE(rate, 24);
  header.writeUInt32LE(rate * 2, 28);
  header.writeUInt16LE(2, 32);
  header.writeUInt16LE(16, 34);
  header.write("data", 36);
  header.writeUInt32LE(data.length, 40);
  return Buffer.concat([header, data]);
}

function runCli(...args: string[]) {
  return spawnSync("node", [CLI, ...args], { encoding: "utf-8" });
}

function whisperAvailable(): boolean {
  return (
    spawnSync("python3", ["-c", "import whisper_timestamped"]).status === 0 ||
    spawnSync("python3", ["-c", "import whisper"]).status === 0
  );
}

beforeAll(() => {
  dir = mkdtempSync(join(tmpdir(), "asr-adapter-"));
  wavPath = join(dir, "sample.wav");
  refPath = join(dir, "reference.txt");
  writeFileSync(wavPath, silentWav(1));
  writeFileSync(refPath, REFERENCE_TEXT + "\n");
});

afterAll(() => {
  rmSync(dir, { recursive: true, force: true });
});

describe("stub mode", () => {
  it("emits schema-valid, time-sorted transcript JSON", () => {
    const out = join(dir, "stub.json");
    const res = runCli("--model", "tiny", "--audio", wavPath,
                       "--reference", refPath, "--out", out, "--stub");
    expect(res.status).toBe(0);
    const doc = JSON.parse(readFileSync(out, "utf-8"));
    expect(() => TranscriptSchema.parse(doc)).not.toThrow();
    expect(doc.audio_id).toBe("sample");
    expect(doc.source).toBe("tiny");
    expect(doc.words.length).toBe(REFERENCE_TEXT.split(/\s+/).length);
    for (let i = 0; i < doc.words.length; i++) {
      expect(doc.words[i].end).toBeGreaterThanOrEqual(doc.words[i].start);
      if (i > 0) expect(doc.words[i].start).toBeGreaterThanOrEqual(doc.words[i - 1].start);
    }
  });

  it("validates against the published JSON schema", () => {
    const out = join(dir, "stub2.json");
    expect(runCli("--model", "base", "--audio", wavPath,
                  "--reference", refPath, "--out", out, "--stub").status).toBe(0);
    execFileSync("python3", ["-c", [
      "import json, sys, jsonschema",
      "doc = json.load(open(sys.argv[1]))",
      "schema = json.load(open(sys.argv[2]))",
      "jsonschema.validate(doc, schema)",
    ].join("\n"), out, SCHEMA]);
  });

  it("is accepted end-to-end by the primary CLI", () => {
    const out = join(dir, "e2e.transcript.json");
    expect(runCli("--model", "tiny", "--audio", wavPath,
                  "--reference", refPath, "--out", out, "--stub").status).toBe(0);
    const manifest = join(dir, "manifest.json");
    writeFileSync(manifest, JSON.stringify({
      speakers: [{
        id: "sample",
        transcript_path: out,
        reference_path: refPath,
        words_in_error: 0,
      }],
    }));
    const resultDir = join(dir, "results");
    const res = spawnSync("speech-clarity",
      ["clarity", manifest, "--out", resultDir], { encoding: "utf-8" });
    expect(res.status).toBe(0);
    const report = JSON.parse(
      readFileSync(join(resultDir, "clarity", "sample.json"), "utf-8"));
    expect(report.clarity_asr).toBe(1.0);
    expect(report.severity).toBe("Mild");
  });

  it("is deterministic", () => {
    expect(stubTranscript(REFERENCE_TEXT, wavPath, "tiny"))
      .toEqual(stubTranscript(REFERENCE_TEXT, wavPath, "tiny"));
  });
});

describe("argument and input validation", () => {
  it("rejects an unsupported model name", () => {
    const out = join(dir, "never.json");
    const res = runCli("--model", "enormous", "--audio", wavPath,
                       "--reference", refPath, "--out", out, "--stub");
    expect(res.status).toBe(2);
    expect(existsSync(out)).toBe(false);
  });

  it("rejects missing flags", () => {
    expect(runCli("--model", "tiny").status).toBe(2);
  });

  it("fails without an output file when the audio is missing", () => {
    const out = join(dir, "never2.json");
    const res = runCli("--model", "tiny", "--audio", join(dir, "nope.wav"),
                       "--reference", refPath, "--out", out, "--stub");
    expect(res.status).toBe(2);
    expect(existsSync(out)).toBe(false);
  });
});

describe("real model mode", () => {
  const haveWhisper = whisperAvailable();

  it.runIf(haveWhisper)("transcribes a short WAV to schema-valid JSON", () => {
    const out = join(dir, "real.json");
    writeFileSync(join(dir, "five.wav"), silentWav(5));
    const res = runCli("--model", "tiny", "--audio", join(dir, "five.wav"),
                       "--reference", refPath, "--out", out);
    expect(res.status).toBe(0);
    const doc = TranscriptSchema.parse(JSON.parse(readFileSync(out, "utf-8")));
    expect(doc.source).toBe("tiny");
  }, 300000);

  it.runIf(!haveWhisper)("exits nonzero with no output file when no backend exists", () => {
    const out = join(dir, "real-fail.json");
    const res = runCli("--model", "tiny", "--audio", wavPath,
                       "--reference", refPath, "--out", out);
    expect(res.status).toBe(1);
    expect(existsSync(out)).toBe(false);
  });
});
