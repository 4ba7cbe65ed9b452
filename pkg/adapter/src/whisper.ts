import { execFile } from "node:child_process";
import { basename, extname } from "node:path";

import type { Transcript, TimedWord } from "./schema.js";

// Runs in a spawned python3; prints a JSON word list on stdout. Prefers
// whisper_timestamped (forced alignment) and falls back to openai-whisper's
// own word timestamps.
const PY_TRANSCRIBE = `
import json, sys
audio_path, model_name = sys.argv[1], sys.argv[2]
try:
    import whisper_timestamped as wt
    model = wt.load_model(model_name)
    result = wt.transcribe(model, wt.load_audio(audio_path), language="en")
    words = [
        {"word": w["text"], "start": float(w["start"]), "end": float(w["end"])}
        for seg in result["segments"]
        for w in seg.get("words", [])
    ]
except ImportError:
    import whisper
    model = whisper.load_model(model_name)
    result = model.transcribe(audio_path, language="en", word_timestamps=True)
    words = [
        {"word": w["word"].strip(), "start": float(w["start"]), "end": float(w["end"])}
        for seg in result["segments"]
        for w in seg.get("words", [])
    ]
print(json.dumps(words))
`;

export function transcribeWithModel(
  audioPath: string,
  modelName: string,
): Promise<Transcript> {
  return new Promise((resolve, reject) => {
    execFile(
      "python3",
      ["-c", PY_TRANSCRIBE, audioPath, modelName],
      { maxBuffer: 64 * 1024 * 1024 },
      (error, stdout, stderr) => {
        if (error) {
          reject(new Error(`transcription failed: ${stderr.trim() || error.message}`));
          return;
        }
        let words: TimedWord[];
        try {
          words = JSON.parse(stdout);
        } catch {
          reject(new Error("transcription produced unparseable output"));
          return;
        }
        words.sort((a, b) => a.start - b.start || a.end - b.end);
        resolve({
          audio_id: basename(audioPath, extname(audioPath)),
          source: modelName,
          words,
        });
      },
    );
  });
}
