// Alignment document schema and validation.
//
// The Python side embeds a JSON array of these documents into the
// report page, one per session. Validation never throws: problems are
// collected and rendered as an in-page diagnostic panel, so a broken
// document can never produce a blank page.

export type MatchKind = "correct" | "substitution" | "insertion" | "deletion";

export interface RefWord {
  word: string;
  begin: number | null;
  end: number | null;
  speaker: string;
}

export interface HypWord {
  word: string;
  begin: number | null;
  end: number | null;
  stream: string;
  assigned_speaker: string | null;
}

export interface Match {
  kind: MatchKind;
  ref_index?: number;
  hyp_index?: number;
}

export interface AlignmentDocument {
  session_id: string;
  metric?: string;
  ref_words: RefWord[];
  hyp_words: HypWord[];
  matches: Match[];
}

const KINDS: MatchKind[] = ["correct", "substitution", "insertion", "deletion"];

/** Which side(s) a match of each kind must reference. */
const NEEDS: Record<MatchKind, { ref: boolean; hyp: boolean }> = {
  correct: { ref: true, hyp: true },
  substitution: { ref: true, hyp: true },
  insertion: { ref: false, hyp: true },
  deletion: { ref: true, hyp: false },
};

function isObject(value: unknown): value is Record<string, unknown> {
  return typeof value === "object" && value !== null && !Array.isArray(value);
}

/** Collect every schema problem; an empty list means the document is valid. */
export function validateDocument(value: unknown): string[] {
  const problems: string[] = [];
  if (!isObject(value)) {
    return [`document: expected an object, got ${typeof value}`];
  }
  if (typeof value.session_id !== "string") {
    problems.push("document: missing string session_id");
  }
  for (const key of ["ref_words", "hyp_words", "matches"] as const) {
    if (!Array.isArray(value[key])) {
      problems.push(`document: missing array ${key}`);
    }
  }
  if (problems.length > 0) {
    return problems;
  }
  const doc = value as unknown as AlignmentDocument;

  doc.ref_words.forEach((w, i) => {
    if (!isObject(w) || typeof w.word !== "string" || typeof w.speaker !== "string") {
      problems.push(`ref_words[${i}]: needs string word and speaker`);
    }
  });
  doc.hyp_words.forEach((w, i) => {
    if (!isObject(w) || typeof w.word !== "string" || typeof w.stream !== "string") {
      problems.push(`hyp_words[${i}]: needs string word and stream`);
    }
  });
  doc.matches.forEach((m, i) => {
    if (!isObject(m) || !KINDS.includes(m.kind as MatchKind)) {
      problems.push(`matches[${i}]: unknown kind ${JSON.stringify((m as Match)?.kind)}`);
      return;
    }
    const needs = NEEDS[m.kind];
    if (needs.ref !== (m.ref_index !== undefined)) {
      problems.push(
        `matches[${i}]: kind ${m.kind} must ${needs.ref ? "" : "not "}carry ref_index`,
      );
    }
    if (needs.hyp !== (m.hyp_index !== undefined)) {
      problems.push(
        `matches[${i}]: kind ${m.kind} must ${needs.hyp ? "" : "not "}carry hyp_index`,
      );
    }
    if (m.ref_index !== undefined && (m.ref_index < 0 || m.ref_index >= doc.ref_words.length)) {
      problems.push(
        `matches[${i}]: ref_index ${m.ref_index} out of range ` +
          `(${doc.ref_words.length} reference words)`,
      );
    }
    if (m.hyp_index !== undefined && (m.hyp_index < 0 || m.hyp_index >= doc.hyp_words.length)) {
      problems.push(
        `matches[${i}]: hyp_index ${m.hyp_index} out of range ` +
          `(${doc.hyp_words.length} hypothesis words)`,
      );
    }
  });
  return problems;
}
