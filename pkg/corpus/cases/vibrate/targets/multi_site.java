package com.example.buzz;

public class Buzzer {
    void shortBuzz(android.os.Vibrator v, long ms) {
        v.vibrate(ms);
    }

    void doubleBuzz(android.os.Vibrator v, long ms) {
        v.vibrate(ms);
        v.vibrate(ms);
    }
}
