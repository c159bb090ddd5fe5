// Copyright the wsnet authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unicode.hpp"

namespace wsnet {

/// Sink for non-fatal diagnostics raised while loading documents.
using WarningSink = std::function<void(const std::string&)>;

struct Parameter {
    std::string raw_name;         // as read from the source document
    std::string normalized_name;  // normalize_name(raw_name)
};

struct Operation {
    std::string name;
    std::vector<Parameter> inputs;
    std::vector<Parameter> outputs;
};

struct ServiceDescription {
    std::string id;  // unique within a corpus
    std::optional<std::string> name;
    std::vector<Operation> operations;
};

/// Deduplicated normalized-name sets (union over all operations).
struct ServiceIo {
    std::vector<std::string> inputs;   // sorted
    std::vector<std::string> outputs;  // sorted
};

ServiceIo service_io(const ServiceDescription& service);

struct VocabEntry {
    std::string name;  // normalized
    bool input_role = false;
    bool output_role = false;
    uint32_t occurrences = 0;  // parameter instances carrying this name
};

/// Which raw name a WSDL message part contributes.
enum class NameSource {
    Element,    // XSD element name when the part references one, else the part name
    Part,       // always the part name
    Qualified,  // message name + "_" + the Element-rule name
};

struct LoadOptions {
    NormalizeOptions normalize;
    NameSource name_source = NameSource::Element;
    bool strict = false;  // reject unknown JSON keys
};

/// An immutable set of service descriptions plus the derived name
/// vocabulary. Safe to share across threads once constructed.
class Corpus {
public:
    Corpus() = default;

    /// Validates id uniqueness and builds the vocabulary and the
    /// per-service I/O index. Throws Error(Schema) on duplicate ids.
    explicit Corpus(std::vector<ServiceDescription> services);

    const std::vector<ServiceDescription>& services() const { return services_; }
    const std::vector<VocabEntry>& vocabulary() const { return vocab_; }

    size_t service_count() const { return services_.size(); }
    size_t operation_count() const;

    /// Vocabulary ids (indices into vocabulary()) of the service-level
    /// input and output sets, sorted ascending.
    const std::vector<uint32_t>& service_inputs(size_t service_index) const {
        return input_ids_[service_index];
    }
    const std::vector<uint32_t>& service_outputs(size_t service_index) const {
        return output_ids_[service_index];
    }

    /// FNV-1a over the normalized content; stable across runs.
    const std::string& fingerprint() const { return fingerprint_; }

    bool operator==(const Corpus& other) const;

private:
    std::vector<ServiceDescription> services_;
    std::vector<VocabEntry> vocab_;
    std::vector<std::vector<uint32_t>> input_ids_;
    std::vector<std::vector<uint32_t>> output_ids_;
    std::string fingerprint_;
};

/// Loads the JSON corpus format:
///   {"services":[{"id":str,"name":str?,
///                 "operations":[{"name":str,"inputs":[str],"outputs":[str]}]}]}
/// Unknown keys are rejected under options.strict, ignored otherwise.
/// Errors name the offending JSON path.
Corpus load_json_corpus(std::string_view text, const LoadOptions& options = {},
                        const WarningSink& warn = nullptr);

Corpus load_json_corpus_file(const std::string& path, const LoadOptions& options = {},
                             const WarningSink& warn = nullptr);

/// Serializes to the JSON corpus format (normalized names, two-space
/// indent, trailing newline). load_json_corpus() of the output yields an
/// equal Corpus.
std::string corpus_to_json(const Corpus& corpus);

void save_json_corpus_file(const Corpus& corpus, const std::string& path);

/// Parses one WSDL 1.1 document. Parameter names follow
/// options.name_source; bindings, SOAP details and SAWSDL annotation
/// attributes are ignored.
ServiceDescription parse_wsdl(std::string_view document, std::string_view service_id,
                              const LoadOptions& options = {}, const WarningSink& warn = nullptr);

ServiceDescription parse_wsdl_file(const std::string& path, const LoadOptions& options = {},
                                   const WarningSink& warn = nullptr);

/// Loads a corpus from WSDL files; service ids are the file stems.
/// When on_error is set, files that fail to parse are reported through it
/// and skipped; otherwise the first failure propagates.
Corpus load_wsdl_corpus(const std::vector<std::string>& paths, const LoadOptions& options = {},
                        const std::function<void(const std::string& path, const std::string& message)>& on_error = nullptr,
                        const WarningSink& warn = nullptr);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace wsnet
