use serde_json::Value;
use zcl_wasm::{gap_table_json, witness_json, zcl_exact_json};

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn exact() {
    let v = parse(&zcl_exact_json(5, 3).unwrap());
    assert_eq!(v["zcl"], 14);
    assert_eq!(v["upper"], 15);
    assert_eq!(v["g_is_exact"], true);
    assert!(v["product_terms"].as_u64().unwrap() > 0);
    assert!(zcl_exact_json(0, 3).is_err());
}

#[test]
fn witness() {
    let v = parse(&witness_json(5, 3).unwrap());
    assert_eq!(v["witness"]["certificate"], "x1^5*x2^5*x3^4");
    assert_eq!(v["g_is_exact"], false);
    assert_eq!(witness_json(2, 2).unwrap(), "null");
}

#[test]
fn gap_table() {
    let v = parse(&gap_table_json(3, 3).unwrap());
    let cells = v.as_array().unwrap();
    assert_eq!(cells.len(), 6);
    let g: Vec<u64> = cells.iter().map(|c| c["g"].as_u64().unwrap()).collect();
    assert_eq!(g, vec![1, 1, 1, 0, 3, 3]);
    assert!(gap_table_json(0, 3).is_err());

    // (64, 4) has 65^4 > 2^20 basis elements.
    let v = parse(&gap_table_json(64, 4).unwrap());
    let last = v.as_array().unwrap().last().unwrap().clone();
    assert_eq!((last["m"].as_u64(), last["s"].as_u64()), (Some(64), Some(4)));
    assert!(last["g"].is_null());
}
