package com.example.buzz;

public class Buzzer {
    void shortBuzz(android.os.Vibrator v, long ms) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            v.vibrate(VibrationEffect.createOneShot(50, 175));
        } else {
            v.vibrate(ms);
        }
    }

    void doubleBuzz(android.os.Vibrator v, long ms) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            v.vibrate(VibrationEffect.createOneShot(50, 175));
        } else {
            v.vibrate(ms);
        }
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            v.vibrate(VibrationEffect.createOneShot(50, 175));
        } else {
            v.vibrate(ms);
        }
    }
}
