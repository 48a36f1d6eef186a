use proptest::prelude::*;

use super::*;
use crate::ff::FieldElement;
use crate::matfield::FieldMat;
use crate::polymat::{PolyMat, Toeplitz};
use crate::upoly::Poly;

fn p7() -> Modulus {
    Modulus::new(7).unwrap()
}

#[test]
fn scalar_layout() {
    let bytes = encode_payload(&Payload::FieldScalar(p7().zero()));
    let tag = b"field_scalar";
    let mut expected = (tag.len() as u64).to_le_bytes().to_vec();
    expected.extend_from_slice(tag);
    expected.extend_from_slice(&0u64.to_le_bytes());
    assert_eq!(bytes, expected);
}

#[test]
fn poly_layout_is_count_then_coefficients() {
    let f = Poly::from_u64s(p7(), &[3, 0, 1]);
    let bytes = encode_payload(&Payload::Poly(f));
    let body = &bytes[8 + 4..];
    let words: Vec<u64> = body.chunks(8).map(|c| u64::from_le_bytes(c.try_into().unwrap())).collect();
    assert_eq!(words, vec![3, 3, 0, 1]);
    // Normalization: x + 0 x^2 is stored as x.
    let a = Poly::from_u64s(p7(), &[0, 1, 0]);
    let b = Poly::x(p7());
    assert_eq!(encode_payload(&Payload::Poly(a)), encode_payload(&Payload::Poly(b)));
}

#[test]
fn decoder_rejects_non_canonical_input() {
    let mut bytes = encode_payload(&Payload::FieldScalar(p7().elem(3)));
    let n = bytes.len();
    bytes[n - 8] = 9;
    assert!(matches!(decode_payload(&bytes, p7()), Err(DecodeError::NonCanonical(_))));
    let mut ok = encode_payload(&Payload::Bool(true));
    ok.push(0);
    assert_eq!(decode_payload(&ok, p7()), Err(DecodeError::TrailingBytes(1)));
    let short = encode_payload(&Payload::RankClaim(4));
    assert_eq!(decode_payload(&short[..short.len() - 1], p7()), Err(DecodeError::Truncated));
}

fn elem(p: Modulus) -> impl Strategy<Value = FieldElement> {
    (0..p.value()).prop_map(move |v| p.elem(v))
}

fn poly(p: Modulus) -> impl Strategy<Value = Poly> {
    prop::collection::vec(0..p.value(), 0..6).prop_map(move |c| Poly::from_u64s(p, &c))
}

fn payload() -> impl Strategy<Value = Payload> {
    let p = Modulus::new(2147483647).unwrap();
    prop_oneof![
        elem(p).prop_map(Payload::FieldScalar),
        prop::collection::vec(elem(p), 0..6).prop_map(Payload::FieldVector),
        (0usize..4, 0usize..4, prop::collection::vec(elem(p), 16)).prop_map(move |(m, n, e)| {
            Payload::FieldMatrix(FieldMat::from_fn(p, m, n, |i, j| e[i * 4 + j]))
        }),
        poly(p).prop_map(Payload::Poly),
        prop::collection::vec(poly(p), 0..4).prop_map(Payload::PolyVector),
        (0usize..3, 0usize..3, prop::collection::vec(poly(p), 9)).prop_map(move |(m, n, e)| {
            Payload::PolyMatrix(PolyMat::from_fn(p, m, n, |i, j| e[i * 3 + j].clone()))
        }),
        prop::collection::vec(any::<u64>(), 0..6).prop_map(Payload::IndexSet),
        (1usize..4, 1usize..4, prop::collection::vec(elem(p), 8)).prop_map(move |(r, m, e)| {
            Payload::ToeplitzSpec(Toeplitz::new(r, m, e[..r + m - 1].to_vec()).unwrap())
        }),
        any::<u64>().prop_map(Payload::RankClaim),
        any::<bool>().prop_map(Payload::Bool),
        prop::collection::vec(any::<i64>(), 0..5).prop_map(Payload::Shift),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn payload_round_trip(v in payload()) {
        let p = Modulus::new(2147483647).unwrap();
        let bytes = encode_payload(&v);
        prop_assert_eq!(decode_payload(&bytes, p).unwrap(), v.clone());
        let json = PayloadJson::from(&v);
        prop_assert_eq!(json.to_payload(p).unwrap(), v);
    }
}

fn sample_transcript() -> Transcript {
    let p = p7();
    let a = PolyMat::from_i64s(p, &[&[&[1], &[0, 1]], &[&[2, 3], &[]]]);
    Transcript {
        protocol_id: "matmul".into(),
        modulus: p,
        sigma: 5,
        mode: Mode::FiatShamir,
        strict: false,
        public_inputs: vec![("A".into(), Payload::PolyMatrix(a))],
        entries: vec![
            Entry::Begin("inner".into()),
            Entry::Message(Message {
                sender: Sender::Verifier,
                label: "alpha".into(),
                payload: Payload::FieldScalar(p.elem(4)),
            }),
            Entry::Message(Message {
                sender: Sender::Prover,
                label: "v".into(),
                payload: Payload::FieldVector(vec![p.elem(1), p.elem(6)]),
            }),
            Entry::End("inner".into()),
        ],
        verdict: Some(Verdict::reject(Reason::SubprotocolRejected {
            id: "inner".into(),
            cause: Box::new(Reason::EvaluationCheckFailed),
        })),
        soundness_bound: Some(Bound { numerator: 3, denominator: 5 }),
    }
}

#[test]
fn json_round_trip_is_byte_identical() {
    let t = sample_transcript();
    let s1 = t.to_json();
    let back = Transcript::from_json(&s1).unwrap();
    assert_eq!(back, t);
    assert_eq!(back.to_json(), s1);
    assert_eq!(decode_entries(&encode_entries(&t.entries), p7()).unwrap(), t.entries);
    assert_eq!(decode_public(&t.public_bytes(), p7()).unwrap(), t.public_inputs);
}

#[test]
fn edited_file_fails_digest_check() {
    let s = sample_transcript().to_json();
    let edited = s.replacen("\"6\"", "\"5\"", 1);
    assert_ne!(edited, s);
    assert!(matches!(Transcript::from_json(&edited), Err(TranscriptError::DigestMismatch { .. })));
    let bad = s.replacen("\"6\"", "\"9\"", 1);
    assert!(matches!(Transcript::from_json(&bad), Err(TranscriptError::Parse(_))));
}

#[test]
fn communication_counts_field_elements() {
    let t = sample_transcript();
    assert_eq!(t.communication(), (2, 1));
}
