#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace eegnlp::corpus {

enum class Sentiment { negative, neutral, positive };

const char* to_string(Sentiment s);
Sentiment sentiment_from_string(const std::string& s);

// The 11 relation types carried by the relation-detection task.
const std::vector<std::string>& relation_types();
int relation_index(const std::string& name);  // -1 if unknown

struct Sentence {
    std::string id;
    std::vector<std::string> tokens;
    std::optional<Sentiment> sentiment;
    std::optional<std::set<std::string>> relations;  // empty set is a valid label
};

struct FixationEvent {
    std::string sentence_id;
    std::string subject_id;
    std::size_t word_index = 0;
    double onset_ms = 0.0;
    double duration_ms = 0.0;
};

struct EegRecording {
    std::string sentence_id;
    std::string subject_id;
    std::uint32_t sample_rate_hz = 500;
    std::uint32_t channels = 105;
    std::vector<float> samples;  // channel-major, channels x n_samples, microvolts

    std::size_t n_samples() const { return channels ? samples.size() / channels : 0; }
    const float* channel(std::size_t c) const { return samples.data() + c * n_samples(); }
    float* channel(std::size_t c) { return samples.data() + c * n_samples(); }
};

struct LoadReport {
    std::size_t sentences = 0;
    std::size_t fixations_kept = 0;
    std::size_t fixations_dropped_short = 0;  // duration < 100 ms
    std::size_t recordings = 0;
};

struct Corpus {
    std::vector<Sentence> sentences;
    // fixations grouped per sentence, time-ordered within each subject
    std::map<std::string, std::vector<FixationEvent>> fixations;
    std::vector<EegRecording> recordings;
    std::string task;  // from meta.json when present
    std::uint32_t n_subjects = 0;
    LoadReport report;

    const Sentence* find_sentence(const std::string& id) const;
    const EegRecording* find_recording(const std::string& sentence_id,
                                       const std::string& subject_id) const;
};

// ---------------------------------------------------------------------------
// Embeddings

enum class EmbeddingKind { random, static_pretrained, contextual };

struct EmbeddingTable {
    EmbeddingKind kind = EmbeddingKind::random;
    std::size_t dim = 0;
    bool trainable = false;
    std::map<std::string, std::vector<float>> vocab;  // random / static
    // contextual: per sentence, one vector per token
    std::map<std::string, std::vector<std::vector<float>>> contextual;

    mutable std::size_t oov_count = 0;

    // Static/random lookup; out-of-vocabulary tokens map to zeros and are
    // counted. For contextual tables use `contextual_vector`.
    std::vector<float> lookup(const std::string& token) const;
    std::vector<float> contextual_vector(const std::string& sentence_id,
                                         std::size_t word_index) const;
};

EmbeddingTable load_embeddings(const std::string& path, EmbeddingKind kind, std::size_t dim);
EmbeddingTable init_random_embeddings(const std::vector<std::string>& vocab, std::size_t dim,
                                      std::uint64_t seed);

// ---------------------------------------------------------------------------
// Splits

struct SplitPlan {
    std::vector<std::string> train_ids;
    std::vector<std::string> test_ids;
    // 5 (train_ids, val_ids) pairs; val sets partition the training ids
    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> folds;
    std::uint64_t seed = 0;
};

// 80/20 train/test split plus 5-fold partition of the training set.
// Stratified by sentiment class, or by relation label-count bucket (0, 1, >=2)
// for multi-label sentences; plain ids fall into a single stratum.
SplitPlan make_split(const std::vector<Sentence>& sentences, std::uint64_t seed);
SplitPlan make_split_ids(const std::vector<std::string>& ids, std::uint64_t seed);

// Re-partition a fixed training set into 5 folds under a new seed, keeping
// the train/test boundary intact.
std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> make_folds(
    const std::vector<std::string>& train_ids, const std::vector<Sentence>& sentences,
    std::uint64_t seed);

// ---------------------------------------------------------------------------
// I/O

// Corpus directory layout:
//   sentences.jsonl   one sentence per line
//   fixations.jsonl   one fixation per line
//   eeg/<sentence>__<subject>.eegb
//   meta.json         generator config echo (task, subjects, ...)
Corpus load_corpus(const std::string& dir);
void save_corpus(const Corpus& corpus, const std::string& dir);

EegRecording read_eegb(const std::string& path);
void write_eegb(const EegRecording& rec, const std::string& path);

// ---------------------------------------------------------------------------
// Synthetic generator

enum class Task { binary_sentiment, ternary_sentiment, relation_detection };
const char* to_string(Task t);
Task task_from_string(const std::string& s);

struct SynthConfig {
    Task task = Task::binary_sentiment;
    std::size_t n_sentences = 260;
    std::size_t vocab_size = 60;   // filler vocabulary size
    std::uint32_t n_subjects = 6;
    std::string band = "gamma";    // injection band
    double gain_uv = 20.0;         // sinusoid amplitude, microvolts
    double noise_uv = 10.0;        // pink-noise RMS per channel, microvolts
    std::uint32_t channels = 105;
    std::uint32_t sample_rate_hz = 500;
    double skip_prob = 0.15;
    double median_fixation_ms = 200.0;
    std::size_t min_tokens = 5;
    std::size_t max_tokens = 9;
    // fraction of sentences whose label-bearing cue occurs only once in the
    // whole corpus while a frequent cue of the opposite class is present;
    // these cap what a text-only model can reach
    double misleading_frac = 0.2;
};

Corpus generate_synthetic(const SynthConfig& cfg, std::uint64_t seed);
void generate_synthetic_to_dir(const SynthConfig& cfg, std::uint64_t seed,
                               const std::string& dir);

// Reference labeler: recomputes a sentence's label from its cue tokens alone.
// Generated corpora agree with it on every sentence.
std::optional<Sentiment> oracle_sentiment(const std::vector<std::string>& tokens);
std::set<std::string> oracle_relations(const std::vector<std::string>& tokens);

// True when the token marks the sentence label (and so receives the EEG
// injection during its fixations).
bool is_cue_token(const std::string& token);

double synth_class_polarity(const Sentence& s);

}  // namespace eegnlp::corpus
