#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sblom/policy.hpp"
#include "sblom/simplex.hpp"

namespace sblom {

// One sealed message on the peer-to-peer leg. Wire form:
// {"type":"msg","from":...,"to":...,"seq":n,"nonce":b64,"ct":b64,"tag":b64}
struct Envelope {
    std::string sender_id;
    std::string receiver_id;
    std::uint64_t seq = 0;
    std::array<unsigned char, 12> nonce{};
    std::vector<unsigned char> ciphertext;
    std::array<unsigned char, 16> tag{};

    nlohmann::json to_json() const;
    static Envelope from_json(const nlohmann::json& j);
};

enum class StreamRole { Writer, Reader };

// One direction of one pair: a writer context seals, a reader context opens,
// and the two hold identical 32-byte session keys. The reverse direction is
// a different context with a different key.
//
// Nonce layout is 4-byte session salt || 8-byte big-endian seq, so a nonce
// never repeats within a session and a tampered seq breaks the tag.
class StreamContext {
public:
    // policy_verdict must be Allow; a denied pair never gets a context and
    // its key is reported as the zero residue by the caller.
    static StreamContext open_stream(StreamRole role, const SimplexMaterial& self,
                                     const PublicPoint& peer, Verdict policy_verdict,
                                     const FieldParams& fp, Rng& rng);

    Envelope seal(std::span<const unsigned char> plaintext); // writer only
    Envelope seal(const std::string& plaintext);

    std::vector<unsigned char> open(const Envelope& env); // reader only
    std::string open_text(const Envelope& env);

    StreamRole role() const { return role_; }
    const std::string& sender_id() const { return sender_id_; }
    const std::string& receiver_id() const { return receiver_id_; }
    const SessionKey& session_key() const { return key_; }
    const BaseElem& field_key() const { return field_key_; }

private:
    StreamContext() = default;

    StreamRole role_ = StreamRole::Writer;
    std::string sender_id_;
    std::string receiver_id_;
    BaseElem field_key_;
    SessionKey key_{};
    std::array<unsigned char, 4> salt_{};
    std::uint64_t seal_seq_ = 0; // last sealed
    std::uint64_t open_seq_ = 0; // last accepted
};

} // namespace sblom
