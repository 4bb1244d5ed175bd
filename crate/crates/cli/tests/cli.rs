use assert_cmd::Command;
use predicates::prelude::*;

fn reptree() -> Command {
    Command::cargo_bin("reptree").unwrap()
}

#[test]
fn check_reports_free_words_and_witnesses() {
    reptree()
        .args(["check", "--k", "2", "--spec", "2/1 @ 1"])
        .write_stdin("010\n")
        .assert()
        .code(0)
        .stdout("FREE\n");
    // "hotshots" with h, o, t, s numbered 0..3
    reptree()
        .args(["check", "--k", "4", "--spec", "2/1 @ 1"])
        .write_stdin("01230123\n")
        .assert()
        .code(1)
        .stdout("end=7 period=4 length=8 exponent=2/1\n");
    reptree()
        .args(["check", "--k", "2", "--spec", "2/1 @ 1"])
        .write_stdin("")
        .assert()
        .code(0)
        .stdout("FREE\n");
}

#[test]
fn check_parse_errors_exit_2() {
    reptree()
        .args(["check", "--k", "2", "--spec", "2/1 @ 1"])
        .write_stdin("0120\n")
        .assert()
        .code(2);
    reptree()
        .args(["check", "--k", "2", "--spec", "1/1 @ 1"])
        .write_stdin("01\n")
        .assert()
        .code(2);
    reptree()
        .args(["check", "--spec", "2 @ 1"])
        .assert()
        .code(2);
}

#[test]
fn tree_human_and_json() {
    reptree()
        .args(["tree", "--k", "2", "--spec", "2/1 @ 2"])
        .assert()
        .code(0)
        .stdout(
            predicate::str::contains("height h           19")
                .and(predicate::str::contains("internal I         477"))
                .and(predicate::str::contains("leaves L           478"))
                .and(predicate::str::contains("max length M       18"))
                .and(predicate::str::contains("max-length I'      2"))
                .and(predicate::str::contains("010011000111001101")),
        );
    let out = reptree()
        .args([
            "tree", "--k", "4", "--spec", "5/4 @ 2", "--json", "--shards", "2",
        ])
        .assert()
        .code(0)
        .get_output()
        .stdout
        .clone();
    let text = String::from_utf8(out).unwrap();
    let line = text.trim_end();
    let v: serde_json::Value = serde_json::from_str(line).unwrap();
    assert_eq!(v["internal"], 3441);
    assert_eq!(v["height"], 17);
    assert_eq!(v["lex_least"], "0112330022110332");
    assert_eq!(v["finite"], true);
    // parsing and re-rendering is byte-identical
    let record: reptree::TreeRecord = serde_json::from_str(line).unwrap();
    assert_eq!(record.to_json(), line);
}

#[test]
fn tree_budget_is_inconclusive() {
    reptree()
        .args(["tree", "--k", "2", "--spec", "2/1 @ 2", "--max-nodes", "1"])
        .assert()
        .code(3)
        .stderr(predicate::str::contains("inconclusive"));
    reptree()
        .args([
            "tree",
            "--k",
            "2",
            "--spec",
            "2/1 @ 2",
            "--max-nodes",
            "1",
            "--json",
        ])
        .assert()
        .code(3)
        .stdout(predicate::str::contains("\"finite\":false"));
}

#[test]
fn tree_checkpoint_and_resume() {
    let dir = tempfile::tempdir().unwrap();
    let ckpt = dir.path().join("t.ckpt");
    let ckpt = ckpt.to_str().unwrap();
    reptree()
        .args([
            "tree",
            "--k",
            "3",
            "--spec",
            "3/2 @ 2",
            "--max-nodes",
            "2000",
        ])
        .args(["--checkpoint", ckpt, "--checkpoint-every", "500"])
        .assert()
        .code(3);
    assert!(std::fs::read_to_string(ckpt)
        .unwrap()
        .starts_with("RTCKPT 1\n"));
    reptree()
        .args([
            "tree", "--k", "3", "--spec", "3/2 @ 2", "--resume", ckpt, "--json",
        ])
        .assert()
        .code(0)
        .stdout(predicate::str::contains("\"internal\":5827,\"height\":31"));
}

#[test]
fn grow_outcomes() {
    let out = reptree()
        .args(["grow", "--k", "3", "--spec", "3/2+ @ 2", "--target", "1000"])
        .assert()
        .code(0)
        .get_output()
        .stdout
        .clone();
    let word = String::from_utf8(out).unwrap();
    assert_eq!(word.trim_end().len(), 1000);
    assert!(word.ends_with('\n'));
    reptree()
        .args(["check", "--k", "3", "--spec", "3/2+ @ 2"])
        .write_stdin(word)
        .assert()
        .code(0)
        .stdout("FREE\n");

    reptree()
        .args(["grow", "--k", "2", "--spec", "2/1 @ 1", "--target", "10"])
        .assert()
        .code(1)
        .stdout("Exhausted(3)\n");
    reptree()
        .args(["grow", "--k", "2", "--spec", "2/1 @ 1", "--target", "1"])
        .assert()
        .code(0)
        .stdout("0\n");
    reptree()
        .args([
            "grow",
            "--k",
            "3",
            "--spec",
            "2/1 @ 1",
            "--target",
            "5000",
            "--max-nodes",
            "10",
        ])
        .assert()
        .code(3);
}

#[test]
fn table_rows_and_filters() {
    reptree()
        .args(["table", "--row", "2,2,2/1", "--row", "5,1,5/4"])
        .assert()
        .code(0)
        .stdout(
            predicate::str::contains("PASS 2,2,2/1")
                .and(predicate::str::contains("PASS 5,1,5/4"))
                .and(predicate::str::contains("2 passed, 0 failed")),
        );
    reptree()
        .args(["table", "--row", "9,9,9/8"])
        .assert()
        .code(0)
        .stdout("no rows\n");
    reptree().args(["table", "--row", "9,9"]).assert().code(2);
}

#[test]
fn table_fast_tier_passes() {
    reptree()
        .args(["table", "--tier", "fast"])
        .assert()
        .code(0)
        .stdout(predicate::str::contains(" 0 failed").and(predicate::str::contains("FAIL").not()));
}

#[test]
fn morphism_subcommands() {
    reptree()
        .args(["morphism", "verify-sync", "--builtin", "h"])
        .assert()
        .code(0)
        .stdout(predicate::str::starts_with(
            "synchronizing (64 triples x 7 offsets",
        ));
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("m.txt");
    std::fs::write(&file, "0 -> 00\n1 -> 01\n").unwrap();
    reptree()
        .args(["morphism", "verify-sync", "--file", file.to_str().unwrap()])
        .assert()
        .code(1)
        .stdout(predicate::str::contains(
            "image of 0 at offset 1 inside image of 00",
        ));
    std::fs::write(&file, "0 -> 0\n1 -> 01\n").unwrap();
    reptree()
        .args(["morphism", "verify-sync", "--file", file.to_str().unwrap()])
        .assert()
        .code(2);
    reptree()
        .args(["morphism", "theorem3", "--n", "600"])
        .assert()
        .code(0)
        .stdout(
            predicate::str::contains("image length       3600")
                .and(predicate::str::contains("witness            none"))
                .and(predicate::str::ends_with("success\n")),
        );
    reptree()
        .args([
            "morphism",
            "smallcase",
            "--builtin",
            "h",
            "--max-root",
            "20",
        ])
        .assert()
        .code(0)
        .stdout("0 repetitions with period below 20\n");
    reptree()
        .args(["morphism", "smallcase", "--builtin", "h", "--cap", "5"])
        .assert()
        .code(3);
}
