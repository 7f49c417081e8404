#include "sblom/session.hpp"

#include <sodium.h>

#include "sblom/encoding.hpp"

namespace sblom {

namespace {

template <std::size_t N>
std::array<unsigned char, N> fixed_bytes(const std::string& b64, const char* what) {
    auto bytes = b64_decode(b64);
    if (bytes.size() != N) fail("InvalidArgument", std::string(what) + " has wrong length");
    std::array<unsigned char, N> out{};
    std::copy(bytes.begin(), bytes.end(), out.begin());
    return out;
}

} // namespace

nlohmann::json Envelope::to_json() const {
    return {{"type", "msg"},
            {"from", sender_id},
            {"to", receiver_id},
            {"seq", seq},
            {"nonce", b64_encode(nonce)},
            {"ct", b64_encode(ciphertext)},
            {"tag", b64_encode(tag)}};
}

Envelope Envelope::from_json(const nlohmann::json& j) {
    Envelope env;
    env.sender_id = j.at("from").get<std::string>();
    env.receiver_id = j.at("to").get<std::string>();
    env.seq = j.at("seq").get<std::uint64_t>();
    env.nonce = fixed_bytes<12>(j.at("nonce").get<std::string>(), "nonce");
    env.ciphertext = b64_decode(j.at("ct").get<std::string>());
    env.tag = fixed_bytes<16>(j.at("tag").get<std::string>(), "tag");
    return env;
}

StreamContext StreamContext::open_stream(StreamRole role, const SimplexMaterial& self,
                                         const PublicPoint& peer, Verdict policy_verdict,
                                         const FieldParams& fp, Rng& rng) {
    if (policy_verdict != Verdict::Allow) fail("PolicyDenied");
    if (peer.r == self.r) fail("SelfChannel");
    ensure_sodium();

    DirectedKey dk = role == StreamRole::Writer ? send_key(self, peer, fp)
                                                : recv_key(self, peer, fp);
    StreamContext ctx;
    ctx.role_ = role;
    ctx.sender_id_ = dk.sender_id;
    ctx.receiver_id_ = dk.receiver_id;
    ctx.field_key_ = dk.k;
    ctx.key_ = derive_session_key(dk, fp);
    if (role == StreamRole::Writer) {
        auto salt = rng.bytes(4);
        std::copy(salt.begin(), salt.end(), ctx.salt_.begin());
    }
    return ctx;
}

Envelope StreamContext::seal(std::span<const unsigned char> plaintext) {
    if (role_ != StreamRole::Writer)
        fail("DirectionMismatch", "reader context cannot seal");

    Envelope env;
    env.sender_id = sender_id_;
    env.receiver_id = receiver_id_;
    env.seq = ++seal_seq_;
    std::copy(salt_.begin(), salt_.end(), env.nonce.begin());
    for (int i = 0; i < 8; ++i)
        env.nonce[4 + i] = static_cast<unsigned char>(env.seq >> (56 - 8 * i));

    env.ciphertext.resize(plaintext.size());
    unsigned long long maclen = 0;
    crypto_aead_chacha20poly1305_ietf_encrypt_detached(
        env.ciphertext.data(), env.tag.data(), &maclen, plaintext.data(),
        plaintext.size(), nullptr, 0, nullptr, env.nonce.data(), key_.data());
    return env;
}

Envelope StreamContext::seal(const std::string& plaintext) {
    return seal(std::span(reinterpret_cast<const unsigned char*>(plaintext.data()),
                          plaintext.size()));
}

std::vector<unsigned char> StreamContext::open(const Envelope& env) {
    if (role_ != StreamRole::Reader)
        fail("DirectionMismatch", "writer context cannot open");
    if (env.sender_id != sender_id_ || env.receiver_id != receiver_id_)
        fail("DirectionMismatch", env.sender_id + "->" + env.receiver_id +
                                      " under a " + sender_id_ + "->" + receiver_id_ +
                                      " context");
    if (env.seq <= open_seq_) fail("ReplayDetected");

    std::vector<unsigned char> plaintext(env.ciphertext.size());
    if (crypto_aead_chacha20poly1305_ietf_decrypt_detached(
            plaintext.data(), nullptr, env.ciphertext.data(), env.ciphertext.size(),
            env.tag.data(), nullptr, 0, env.nonce.data(), key_.data()) != 0)
        fail("TagMismatch");
    open_seq_ = env.seq;
    return plaintext;
}

std::string StreamContext::open_text(const Envelope& env) {
    auto bytes = open(env);
    return std::string(bytes.begin(), bytes.end());
}

} // namespace sblom
