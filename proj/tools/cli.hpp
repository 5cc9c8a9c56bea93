#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "swsc/report.hpp"
#include "swsc/swsc.hpp"

namespace swsc::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kUsage = 2,
    kIo = 3,
    kCorrupt = 4,
    kParameter = 5,
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Standard streams used when a path is "-".
struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

inline std::vector<std::uint8_t> read_all(const std::string& path, std::istream& stdin_stream) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(stdin_stream), std::istreambuf_iterator<char>()};
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path + " for reading");
    std::vector<std::uint8_t> data{std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
    if (f.bad()) throw IoError("read failed: " + path);
    return data;
}

inline void write_all(const std::string& path, std::span<const std::uint8_t> data, std::ostream& stdout_stream) {
    if (path == "-") {
        stdout_stream.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
        stdout_stream.flush();
        if (!stdout_stream) throw IoError("write to standard output failed");
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + path + " for writing");
    f.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (!f) throw IoError("write failed: " + path);
}

struct Options {
    std::string input = "-";
    std::string output = "-";
    std::optional<std::uint64_t> sigma;
    std::optional<double> lambda;
    std::optional<std::uint64_t> c;
    std::string backend = "trie";
    std::optional<unsigned> symbol_bytes;
    std::optional<std::uint64_t> hash_seed;
    double trie_eps = 0.5;
    bool verify_bound = false;
    bool json = false;
    // gen
    std::string dist = "uniform";
    double zipf_s = 1.0;
    unsigned states = 8;
    double stickiness = 0.9;
    std::uint64_t n = 0;
    std::uint64_t seed = 1;
};

namespace detail {

inline void emit(std::ostream& os, bool json, const nlohmann::json& doc) {
    if (json) {
        os << doc.dump(2) << '\n';
        return;
    }
    for (const auto& [section, body] : doc.items()) {
        if (body.is_object()) {
            write_key_values(os, body, section == "report" ? "" : section + ".");
        } else {
            write_key_values(os, nlohmann::json{{section, body}});
        }
    }
}

// Reports share stdout only when the payload is not written there.
inline std::ostream& report_stream(const Options& o, Streams& s) { return o.output == "-" ? s.err : s.out; }

inline unsigned resolve_symbol_bytes(const Options& o, std::uint64_t sigma) {
    const unsigned needed = symbol_bytes_for(sigma);
    if (!o.symbol_bytes) return needed;
    check_symbol_bytes(*o.symbol_bytes);
    if (*o.symbol_bytes < needed) {
        throw ParameterError("--symbol-bytes " + std::to_string(*o.symbol_bytes) + " cannot hold symbols below sigma=" +
                             std::to_string(sigma));
    }
    return *o.symbol_bytes;
}

inline CoderParams required_params(const Options& o) {
    if (!o.sigma || !o.lambda || !o.c) throw CLI::ValidationError("--sigma, --lambda and --c are required");
    return derive_params(*o.sigma, *o.lambda, *o.c);
}

inline CoderOptions coder_options(const Options& o) {
    CoderOptions co;
    const auto backend = parse_backend(o.backend);
    if (!backend) throw CLI::ValidationError("--backend must be trie or hashed");
    co.backend = *backend;
    co.trie_eps = o.trie_eps;
    co.hash_seed = o.hash_seed ? *o.hash_seed : std::random_device{}();
    return co;
}

inline int cmd_params(const Options& o, Streams& s) {
    const CoderParams p = required_params(o);
    emit(s.out, o.json, {{"params", to_json(p)}});
    return kOk;
}

inline int cmd_encode(const Options& o, Streams& s) {
    const CoderParams p = required_params(o);
    const CoderOptions co = coder_options(o);
    const unsigned bytes = resolve_symbol_bytes(o, p.sigma);
    const std::vector<Symbol> symbols = unpack_symbols(read_all(o.input, s.in), bytes);
    const EncodedStream enc = encode_stream(p, symbols, co);
    write_all(o.output, enc.bytes, s.out);

    nlohmann::json doc{{"params", to_json(p)}, {"encode", to_json(enc.report)}};
    doc["encode"]["backend"] = std::string(to_string(co.backend));
    doc["encode"]["output_bytes"] = enc.bytes.size();
    if (o.verify_bound) {
        const EntropyStats stats = entropy_stats(symbols);
        doc["bound"] = to_json(check_bound(enc.report, stats, p));
    }
    emit(report_stream(o, s), o.json, doc);
    return kOk;
}

inline int cmd_decode(const Options& o, Streams& s) {
    const std::vector<std::uint8_t> data = read_all(o.input, s.in);
    CoderOptions co;
    if (o.hash_seed) co.hash_seed = *o.hash_seed;
    co.trie_eps = o.trie_eps;
    const StreamHeader header = StreamHeader::parse(data);
    const CoderParams p = header.params();
    if (o.sigma && *o.sigma != p.sigma) throw ParameterError("--sigma contradicts the stream header");
    if (o.lambda && *o.lambda != p.lambda) throw ParameterError("--lambda contradicts the stream header");
    if (o.c && *o.c != p.c) throw ParameterError("--c contradicts the stream header");
    const unsigned bytes = resolve_symbol_bytes(o, p.sigma);

    const DecodedStream dec = decode_stream(data, co);
    write_all(o.output, pack_symbols(dec.symbols, bytes), s.out);
    emit(report_stream(o, s), o.json, {{"params", to_json(p)}, {"decode", to_json(dec.report)}});
    return kOk;
}

inline int cmd_stats(const Options& o, Streams& s) {
    if (!o.sigma && !o.symbol_bytes) throw CLI::ValidationError("stats needs --sigma or --symbol-bytes");
    const unsigned bytes = o.symbol_bytes ? *o.symbol_bytes : symbol_bytes_for(*o.sigma);
    const std::vector<Symbol> symbols = unpack_symbols(read_all(o.input, s.in), bytes);
    if (o.sigma) {
        for (const Symbol a : symbols) {
            if (a >= *o.sigma) throw ParameterError("input symbol " + std::to_string(a) + " outside alphabet");
        }
    }
    emit(s.out, o.json, {{"stats", to_json(entropy_stats(symbols))}});
    return kOk;
}

inline int cmd_gen(const Options& o, Streams& s) {
    if (!o.sigma) throw CLI::ValidationError("gen needs --sigma");
    const auto dist = parse_distribution(o.dist);
    if (!dist) throw CLI::ValidationError("--dist must be uniform, zipf or markov");
    CorpusSpec spec;
    spec.dist = *dist;
    spec.sigma = *o.sigma;
    spec.n = o.n;
    spec.seed = o.seed;
    spec.zipf_s = o.zipf_s;
    spec.states = o.states;
    spec.stickiness = o.stickiness;
    const unsigned bytes = resolve_symbol_bytes(o, spec.sigma);
    write_all(o.output, pack_symbols(generate_corpus(spec), bytes), s.out);
    return kOk;
}

}  // namespace detail

/// Parses argv and runs one command. Never throws; returns an exit code.
inline int run(int argc, const char* const* argv, Streams streams) {
    CLI::App app{"Sliding-window adaptive Shannon coder for large alphabets"};
    app.require_subcommand(1);
    Options o;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("-i,--input", o.input, "input path, - for stdin")->capture_default_str();
        cmd->add_option("-o,--output", o.output, "output path, - for stdout")->capture_default_str();
    };
    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("--sigma", o.sigma, "alphabet size")->check(CLI::Range(std::uint64_t{2}, kMaxSigma));
        cmd->add_option("--lambda", o.lambda, "space/redundancy tradeoff, >= 1");
        cmd->add_option("--c", o.c, "window scale constant, >= 1");
    };

    auto* params = app.add_subcommand("params", "print derived coder constants");
    add_params(params);
    params->add_flag("--json", o.json);

    auto* encode = app.add_subcommand("encode", "compress a raw symbol file");
    add_io(encode);
    add_params(encode);
    encode->add_option("--backend", o.backend, "dictionary backend: trie or hashed")->capture_default_str();
    encode->add_option("--symbol-bytes", o.symbol_bytes, "input symbol width (1, 2 or 4)");
    encode->add_option("--hash-seed", o.hash_seed, "seed for the hashed backend");
    encode->add_option("--trie-eps", o.trie_eps, "trie branching exponent in (0, 1]")->capture_default_str();
    encode->add_flag("--verify-bound", o.verify_bound, "check the payload against the encoding-length bound");
    encode->add_flag("--json", o.json);

    auto* decode = app.add_subcommand("decode", "decompress to a raw symbol file");
    add_io(decode);
    add_params(decode);
    decode->add_option("--symbol-bytes", o.symbol_bytes, "output symbol width (1, 2 or 4)");
    decode->add_option("--hash-seed", o.hash_seed, "seed for the hashed backend");
    decode->add_option("--trie-eps", o.trie_eps)->capture_default_str();
    decode->add_flag("--json", o.json);

    auto* stats = app.add_subcommand("stats", "entropy statistics of a raw symbol file");
    stats->add_option("-i,--input", o.input, "input path, - for stdin")->capture_default_str();
    stats->add_option("--sigma", o.sigma, "alphabet size");
    stats->add_option("--symbol-bytes", o.symbol_bytes, "input symbol width (1, 2 or 4)");
    stats->add_flag("--json", o.json);

    auto* gen = app.add_subcommand("gen", "generate a synthetic corpus");
    gen->add_option("-o,--output", o.output, "output path, - for stdout")->capture_default_str();
    gen->add_option("--dist", o.dist, "uniform, zipf or markov")->capture_default_str();
    gen->add_option("--s", o.zipf_s, "zipf exponent")->capture_default_str();
    gen->add_option("--states", o.states, "markov states")->capture_default_str();
    gen->add_option("--stickiness", o.stickiness, "markov self-transition probability")->capture_default_str();
    gen->add_option("--sigma", o.sigma, "alphabet size")->required();
    gen->add_option("--n", o.n, "number of symbols")->required();
    gen->add_option("--seed", o.seed, "mt19937_64 seed")->capture_default_str();
    gen->add_option("--symbol-bytes", o.symbol_bytes, "output symbol width (1, 2 or 4)");

    try {
        app.parse(argc, argv);
        if (params->parsed()) return detail::cmd_params(o, streams);
        if (encode->parsed()) return detail::cmd_encode(o, streams);
        if (decode->parsed()) return detail::cmd_decode(o, streams);
        if (stats->parsed()) return detail::cmd_stats(o, streams);
        return detail::cmd_gen(o, streams);
    } catch (const CLI::CallForHelp&) {
        streams.out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        streams.out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        streams.err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        streams.err << "I/O error: " << e.what() << '\n';
        return kIo;
    } catch (const CorruptStreamError& e) {
        streams.err << "corrupt stream: " << e.what() << '\n';
        return kCorrupt;
    } catch (const ParameterError& e) {
        streams.err << "parameter error: " << e.what() << '\n';
        return kParameter;
    } catch (const std::invalid_argument& e) {
        streams.err << "parameter error: " << e.what() << '\n';
        return kParameter;
    } catch (const std::out_of_range& e) {
        streams.err << "parameter error: " << e.what() << '\n';
        return kParameter;
    } catch (const std::exception& e) {
        streams.err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

}  // namespace swsc::cli
